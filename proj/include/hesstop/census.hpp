#pragma once

#include <string>
#include <vector>

#include "hesstop/isotopy.hpp"
#include "hesstop/lineindex.hpp"

namespace hesstop {

/// One polynomial f = P^m Q^{2k} of degree n = m + 2k from the
/// component-separating family, with its predicted index (2 - m)/2.
struct CensusRow {
  int n = 0;
  int k = 0;
  int m = 0;
  /// Numerator of the predicted index (2 - m)/2.
  long index_numerator = 0;
  /// Lower bound on the number of components of Hyp(n) (rows for this n).
  int lower_bound = 0;

  HalfIndex predicted_index() const { return {index_numerator, 0.0}; }
};

/// Throws DomainError unless 2k + m = n and either k = 0, m = n >= 3 or
/// k >= 1, m > max(2, k).
void validate_row(const CensusRow& row);

/// Rows (0, n) and (k, n - 2k) for every admissible k >= 1. n >= 3.
std::vector<CensusRow> enumerate(int n);

/// floor((n - 1) / 2).
int lower_bound(int n);

struct RowCertificate {
  CensusRow row;
  Classification hyperbolic;               ///< f hyperbolic
  std::optional<Classification> elliptic;  ///< Q^{2k} elliptic (k >= 1)
  std::optional<InequalityCertificate> inequality;
  std::optional<IsotopyCertificate> isotopy;
  IndexResult index_f;                     ///< measured index of II_f
  std::optional<IndexResult> index_p;      ///< measured index of II_{P^m} (k >= 1)
};

/// Runs every certification step of a row and checks that the measured index
/// equals (2 - m)/2. Throws CertificationFailed naming the failing step.
RowCertificate certify_row(const CensusRow& row, int n_initial = 1024);

}  // namespace hesstop
