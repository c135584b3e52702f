#pragma once

#include <string>
#include <vector>

#include "hesstop/rational.hpp"

namespace hesstop {

/// Pascal triangle of exact binomials up to row N.
class BinomTable {
 public:
  explicit BinomTable(int max_row);
  int max_row() const { return static_cast<int>(rows_.size()) - 1; }
  /// C(a, b), zero outside 0 <= b <= a; throws DomainError for a > max_row.
  const BigInt& operator()(long a, long b) const;
  const std::vector<BigInt>& row(int r) const { return rows_.at(static_cast<std::size_t>(r)); }

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_ = 0;
};

// Literal evaluations of the coefficient sums appearing when the bracket of
// P^m and Q^{2k} is expanded for even m.

/// m >= 2 even, 0 <= j <= (m-2)/2.
BigInt A_raw(int m, int j);
/// m >= 2 even.
BigInt B_raw(int m);
/// m >= 4 even, 1 <= j <= (m-2)/2.
BigInt C_raw(int m, int j);

/// A(j) = C(m-1, j), B = C(m-1, m/2), C(j) = C(m-1, j + m/2 - 1) over the whole range.
bool closed_forms_check(int m);

/// sum_{k=1}^{j} (-1)^k C(m, j+k) [1 + (1-2k)/m C(m, j-k+1)], exactly.
Rational alternating_product_sum(int m, int j);

/// sum_{k=1}^{j+1} (-1)^(k+1) (2k-1) C(m, k+j) C(m, j-k+1).
BigInt T(int m, int j);
/// C(m, j)^2 + 2 sum_{k=1}^{j} (-1)^k C(m, j-k) C(m, j+k).
BigInt F(int m, int j);

/// T(m,j) = T(m-1,j) + T(m-1,j-1) + F(m-1,j), all sides from raw sums.
bool T_recurrence_holds(int m, int j);
/// F(m,j) = F(m-1,j) + F(m-1,j-1).
bool F_recurrence_holds(int m, int j);

/// (m-k) C(m,k) = m C(m-1,k).
bool absorption_holds(int m, int k);
/// (-1)^r C(m-1,r) = sum_{k=0}^{r} (-1)^k C(m,k).
bool alternating_sum_holds(int m, int r);

/// bracket(P^m, Q^{2k}) + 2 k m^2 (m-1) (x^2+y^2)^(k+m-2) is the zero polynomial.
bool bracket_closed_form_check(int m, int k);

/// Pass/fail per m for one identity family.
struct IdentityRow {
  std::string name;
  std::vector<int> ms;
  std::vector<bool> passed;
  bool all_passed() const;
};

/// Runs every identity family for m up to m_max (the bracket closed form for k = 1..k_max).
std::vector<IdentityRow> verify_identities(int m_max, int k_max = 3);

}  // namespace hesstop
