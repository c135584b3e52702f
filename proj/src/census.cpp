#include "hesstop/census.hpp"

#include <algorithm>

#include "hesstop/errors.hpp"

namespace hesstop {

void validate_row(const CensusRow& row) {
  const std::string where = "(n,k,m) = (" + std::to_string(row.n) + "," + std::to_string(row.k) + "," +
                            std::to_string(row.m) + ")";
  if (row.n < 3) throw DomainError("census degree must be >= 3: " + where);
  if (2 * row.k + row.m != row.n) throw DomainError("2k + m != n: " + where);
  if (row.k < 0) throw DomainError("negative k: " + where);
  if (row.k >= 1 && row.m <= std::max(2, row.k)) throw DomainError("m > max(2, k) violated: " + where);
  if (row.index_numerator != 2 - row.m) throw DomainError("index is not (2 - m)/2: " + where);
}

int lower_bound(int n) {
  if (n < 3) throw DomainError("lower_bound needs n >= 3");
  return (n - 1) / 2;
}

std::vector<CensusRow> enumerate(int n) {
  if (n < 3) throw DomainError("census needs n >= 3, got " + std::to_string(n));
  std::vector<CensusRow> rows;
  rows.push_back({n, 0, n, 2L - n, 0});
  for (int k = 1; 2 * k < n; ++k) {
    const int m = n - 2 * k;
    if (m > std::max(2, k)) rows.push_back({n, k, m, 2L - m, 0});
  }
  for (auto& r : rows) r.lower_bound = static_cast<int>(rows.size());
  return rows;
}

namespace {

IndexResult measured_index(const HomoPoly& f, int n_initial, const char* stage) {
  try {
    return index_at_origin(second_fundamental_form(f), {n_initial, Branch::Plus, 1.0, 20});
  } catch (const Error& e) {
    throw CertificationFailed(stage, e.what());
  }
}

}  // namespace

RowCertificate certify_row(const CensusRow& row, int n_initial) {
  validate_row(row);
  const HomoPoly p = family_P(row.m);
  const HomoPoly f = row.k == 0 ? p : p * family_Q(row.k);
  RowCertificate cert{row, is_hyperbolic(f), std::nullopt, std::nullopt, std::nullopt, {}, std::nullopt};
  if (!cert.hyperbolic.holds) throw CertificationFailed("is_hyperbolic", f.to_string());
  if (row.k >= 1) {
    const HomoPoly q = family_Q(row.k);
    cert.elliptic = is_elliptic(q);
    if (!cert.elliptic->holds) throw CertificationFailed("is_elliptic", q.to_string());
    cert.inequality = verify_inequality_one(p, q);
    if (!cert.inequality->holds) throw CertificationFailed("verify_inequality_one", cert.inequality->bracket.to_string());
    try {
      cert.isotopy = isotopy_certify(p, q);
    } catch (const PreconditionFailed& e) {
      throw CertificationFailed("isotopy_certify", e.what());
    }
    if (!cert.isotopy->valid()) throw CertificationFailed("isotopy_certify", "certificate has an unsatisfied condition");
    cert.index_p = measured_index(p, n_initial, "index_at_origin(P)");
    if (cert.index_p->index.numerator != row.index_numerator) {
      throw CertificationFailed("index_at_origin(P)", "measured " + cert.index_p->index.to_string());
    }
  }
  cert.index_f = measured_index(f, n_initial, "index_at_origin(f)");
  if (cert.index_f.index.numerator != row.index_numerator) {
    throw CertificationFailed("index_at_origin(f)", "measured " + cert.index_f.index.to_string() + ", expected " +
                                                        row.predicted_index().to_string());
  }
  return cert;
}

}  // namespace hesstop
