#include "hesstop/combinat.hpp"

#include <algorithm>

#include "hesstop/errors.hpp"
#include "hesstop/homopoly.hpp"
#include "hesstop/parallel.hpp"
#include "hesstop/quadform.hpp"

namespace hesstop {

BinomTable::BinomTable(int max_row) {
  if (max_row < 0) throw DomainError("BinomTable needs a non-negative row count");
  rows_.reserve(static_cast<std::size_t>(max_row) + 1);
  rows_.push_back({BigInt(1)});
  for (int r = 1; r <= max_row; ++r) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<std::size_t>(r) + 1);
    row.front() = 1;
    row.back() = 1;
    // Stifel: C(r, j) = C(r-1, j) + C(r-1, j-1).
    for (int j = 1; j < r; ++j) row[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j)] + prev[static_cast<std::size_t>(j - 1)];
    rows_.push_back(std::move(row));
  }
}

const BigInt& BinomTable::operator()(long a, long b) const {
  if (a > max_row()) throw DomainError("BinomTable row " + std::to_string(a) + " out of range");
  if (a < 0 || b < 0 || b > a) return zero_;
  return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

namespace {

void require_even(int m, int min_m, const char* what) {
  if (m < min_m || m % 2 != 0) {
    throw DomainError(std::string(what) + " needs even m >= " + std::to_string(min_m) + ", got " + std::to_string(m));
  }
}

BigInt alternating(int e, const BigInt& v) { return e % 2 == 0 ? v : BigInt(-v); }

BigInt C(long a, long b) {
  thread_local BinomTable table(64);
  if (a > table.max_row()) table = BinomTable(static_cast<int>(a) + 16);
  return table(a, b);
}

}  // namespace

BigInt A_raw(int m, int j) {
  require_even(m, 2, "A");
  if (j < 0 || j > (m - 2) / 2) throw DomainError("A: j out of range");
  BigInt s = C(m - 1, 2 * j);
  for (int k = 0; k <= j - 1; ++k) {
    s += C(m - 1, 2 * k) * C(m - 1, 2 * j - 2 * k) - C(m - 1, 2 * k + 1) * C(m - 1, 2 * j - 2 * k - 1);
  }
  return alternating(j, s);
}

BigInt B_raw(int m) {
  require_even(m, 2, "B");
  BigInt s = 1 - m;
  for (int k = 0; k <= m / 2 - 2; ++k) s += C(m - 1, 2 * k + 1) * (C(m - 1, 2 * k + 2) - C(m - 1, 2 * k));
  return alternating(m / 2, s);
}

BigInt C_raw(int m, int j) {
  require_even(m, 4, "C");
  if (j < 1 || j > (m - 2) / 2) throw DomainError("C: j out of range");
  BigInt s = -C(m - 1, 2 * j - 1);
  for (int k = 0; k <= m / 2 - j - 1; ++k) {
    s += C(m - 1, 2 * k + 2 * j) * C(m - 1, 2 * k + 1) - C(m - 1, 2 * k) * C(m - 1, 2 * k + 2 * j - 1);
  }
  return alternating(m / 2 + j - 1, s);
}

bool closed_forms_check(int m) {
  require_even(m, 4, "closed_forms_check");
  for (int j = 0; j <= (m - 2) / 2; ++j) {
    if (A_raw(m, j) != C(m - 1, j)) return false;
  }
  if (B_raw(m) != C(m - 1, m / 2)) return false;
  for (int j = 1; j <= (m - 2) / 2; ++j) {
    if (C_raw(m, j) != C(m - 1, j + m / 2 - 1)) return false;
  }
  return true;
}

Rational alternating_product_sum(int m, int j) {
  if (m < 1 || j < 0) throw DomainError("alternating_product_sum needs m >= 1, j >= 0");
  Rational s = 0;
  for (int k = 1; k <= j; ++k) {
    Rational term = Rational(1) + Rational(1 - 2 * k, m) * Rational(C(m, j - k + 1));
    term.canonicalize();
    s += Rational(alternating(k, C(m, j + k))) * term;
  }
  return s;
}

BigInt T(int m, int j) {
  BigInt s = 0;
  for (int k = 1; k <= j + 1; ++k) s += alternating(k + 1, (2 * k - 1) * C(m, k + j) * C(m, j - k + 1));
  return s;
}

BigInt F(int m, int j) {
  BigInt s = C(m, j) * C(m, j);
  for (int k = 1; k <= j; ++k) s += 2 * alternating(k, C(m, j - k) * C(m, j + k));
  return s;
}

bool T_recurrence_holds(int m, int j) { return T(m, j) == T(m - 1, j) + T(m - 1, j - 1) + F(m - 1, j); }

bool F_recurrence_holds(int m, int j) { return F(m, j) == F(m - 1, j) + F(m - 1, j - 1); }

bool absorption_holds(int m, int k) { return (m - k) * C(m, k) == m * C(m - 1, k); }

bool alternating_sum_holds(int m, int r) {
  BigInt s = 0;
  for (int k = 0; k <= r; ++k) s += alternating(k, C(m, k));
  return alternating(r, C(m - 1, r)) == s;
}

bool bracket_closed_form_check(int m, int k) {
  if (m < 2 || k < 1) throw DomainError("bracket closed form needs m >= 2, k >= 1");
  const long scale = 2L * k * m * m * (m - 1);
  return (bracket(family_P(m), family_Q(k)) + Rational(scale) * family_Q(k + m - 2)).is_zero();
}

bool IdentityRow::all_passed() const { return std::all_of(passed.begin(), passed.end(), [](bool b) { return b; }); }

std::vector<IdentityRow> verify_identities(int m_max, int k_max) {
  if (m_max < 2) throw DomainError("verify_identities needs m_max >= 2");
  std::vector<IdentityRow> rows;
  auto add = [&](std::string name, int m_lo, int step, auto&& check) {
    IdentityRow row{std::move(name), {}, {}};
    for (int m = m_lo; m <= m_max; m += step) row.ms.push_back(m);
    std::vector<char> ok(row.ms.size(), 0);
    parallel_for(row.ms.size(), [&](std::size_t i) { ok[i] = check(row.ms[i]) ? 1 : 0; });
    for (char c : ok) row.passed.push_back(c != 0);
    rows.push_back(std::move(row));
  };
  add("absorption (m-k)C(m,k) = mC(m-1,k)", 1, 1, [](int m) {
    for (int k = 0; k <= m; ++k)
      if (!absorption_holds(m, k)) return false;
    return true;
  });
  add("alternating sum (-1)^r C(m-1,r)", 1, 1, [](int m) {
    for (int r = 0; r < m; ++r)
      if (!alternating_sum_holds(m, r)) return false;
    return true;
  });
  add("closed forms A, B, C", 4, 2, [](int m) { return closed_forms_check(m); });
  add("alternating product sum = 0", 1, 1, [](int m) {
    for (int j = 0; j <= m - 1; ++j)
      if (alternating_product_sum(m, j) != 0) return false;
    return true;
  });
  add("T recurrence", 2, 1, [](int m) {
    for (int j = 0; j <= m; ++j)
      if (!T_recurrence_holds(m, j)) return false;
    return true;
  });
  add("F recurrence", 2, 1, [](int m) {
    for (int j = 0; j <= m; ++j)
      if (!F_recurrence_holds(m, j)) return false;
    return true;
  });
  add("F(m,j) = C(m,j)", 2, 1, [](int m) {
    for (int j = 0; j <= m; ++j)
      if (F(m, j) != C(m, j)) return false;
    return true;
  });
  add("T(m,j) = (j+1)C(m,j+1)", 2, 1, [](int m) {
    for (int j = 0; j <= m; ++j)
      if (T(m, j) != (j + 1) * C(m, j + 1)) return false;
    return true;
  });
  add("bracket(P^m, Q^2k) closed form", 2, 1, [k_max](int m) {
    for (int k = 1; k <= k_max; ++k)
      if (!bracket_closed_form_check(m, k)) return false;
    return true;
  });
  return rows;
}

}  // namespace hesstop
