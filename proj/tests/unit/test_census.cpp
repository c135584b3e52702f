#include <doctest.h>

#include <set>

#include "hesstop/census.hpp"
#include "hesstop/errors.hpp"

using namespace hesstop;

namespace {
struct Cell {
  int n, k, m;
  const char* index;
  int bound;
};

// Reference table of the component-separating family up to degree 8.
const Cell kTable[] = {
    {3, 0, 3, "-1/2", 1}, {4, 0, 4, "-1", 1},   {5, 0, 5, "-3/2", 2}, {5, 1, 3, "-1/2", 2},
    {6, 0, 6, "-2", 2},   {6, 1, 4, "-1", 2},   {7, 0, 7, "-5/2", 3}, {7, 1, 5, "-3/2", 3},
    {7, 2, 3, "-1/2", 3}, {8, 0, 8, "-3", 3},   {8, 1, 6, "-2", 3},   {8, 2, 4, "-1", 3},
};
}  // namespace

TEST_CASE("enumeration reproduces the reference table") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    std::vector<Cell> expect;
    for (const auto& c : kTable)
      if (c.n == n) expect.push_back(c);
    const auto rows = enumerate(n);
    REQUIRE(rows.size() == expect.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].n == expect[i].n);
      CHECK(rows[i].k == expect[i].k);
      CHECK(rows[i].m == expect[i].m);
      CHECK(rows[i].predicted_index().to_string() == expect[i].index);
      CHECK(rows[i].lower_bound == expect[i].bound);
    }
  }
  CHECK_THROWS_AS(enumerate(2), DomainError);
}

TEST_CASE("lower bound and distinct indexes") {
  for (int n = 3; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(lower_bound(n) == (n - 1) / 2);
    CHECK(lower_bound(n) == (n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2));
    const auto rows = enumerate(n);
    int admissible = 1;
    for (int k = 1; 2 * k < n; ++k)
      if (n - 2 * k > std::max(2, k)) ++admissible;
    CHECK(static_cast<int>(rows.size()) == admissible);
    // The family realizes the claimed bound for n <= 8 and n = 10 only; for
    // n = 9 and n >= 11 the condition m > max(2, k) drops the small-m rows.
    if (n <= 8 || n == 10) CHECK(static_cast<int>(rows.size()) == lower_bound(n));
    else CHECK(static_cast<int>(rows.size()) < lower_bound(n));
    for (const auto& r : rows) CHECK(r.lower_bound == static_cast<int>(rows.size()));
    std::set<long> idx;
    for (const auto& r : rows) {
      idx.insert(r.index_numerator);
      CHECK(2 * r.k + r.m == n);
      if (r.k == 0) CHECK(r.m == n);
      if (r.k >= 1) CHECK(r.m > std::max(2, r.k));
      if (n % 2 == 0) CHECK(r.index_numerator == 2 * (r.k + 1) - n);
    }
    CHECK(idx.size() == rows.size());
  }
}

TEST_CASE("row certification") {
  const RowCertificate a = certify_row({5, 1, 3, -1, 2});
  CHECK(a.index_f.index.to_string() == "-1/2");
  REQUIRE(a.isotopy);
  CHECK(a.isotopy->valid());
  REQUIRE(a.index_p);
  CHECK(a.index_p->index == a.index_f.index);
  CHECK(certify_row({6, 1, 4, -2, 2}).index_f.index.to_string() == "-1");
  CHECK(certify_row({7, 0, 7, -5, 3}).index_f.index.to_string() == "-5/2");
  CHECK_THROWS_AS(certify_row({6, 2, 2, 0, 2}), DomainError);
  CHECK_THROWS_AS(validate_row({6, 1, 3, -1, 2}), DomainError);
  for (int n = 3; n <= 8; ++n)
    for (const auto& r : enumerate(n)) CHECK_NOTHROW(certify_row(r));
}

TEST_CASE("the first dropped pair is genuinely not hyperbolic") {
  // n = 9, k = 3 would need m = 3 = k; P^3 Q^6 fails the polar criterion at equality.
  CHECK(polar_criterion_cos_family(3, 3).max_value == 0);
  CHECK_FALSE(is_hyperbolic(family_f(3, 3)).holds);
}
