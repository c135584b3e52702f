#pragma once

#include <string>
#include <vector>

#include "hesstop/classify.hpp"

namespace hesstop {

enum class IsotopyKind { DirectPath, ProductPath, Composite };
const char* to_string(IsotopyKind k);

/// One certified (or failed) condition of an isotopy argument.
struct Condition {
  std::string name;
  bool satisfied = false;
  SignCertificate certificate;
};

/// Evidence that a linear family of forms stays hyperbolic for t in [0, 1].
///
/// a0 + a1 t + a2 t^2 is the discriminant of the family; `conditions` lists
/// every sign fact used, `legs` holds sub-certificates of composite proofs.
struct IsotopyCertificate {
  IsotopyKind kind = IsotopyKind::DirectPath;
  HomoPoly a0;
  HomoPoly a1;
  HomoPoly a2;
  std::string branch;
  std::vector<Condition> hypotheses;
  std::vector<Condition> conditions;
  std::vector<IsotopyCertificate> legs;
  std::string conclusion;

  bool valid() const;
};

struct PathSignResult {
  bool holds = false;
  std::vector<Condition> conditions;
};

/// a0 > 0, a0 + a1 + a2 > 0 and a2 <= 0 on the punctured plane imply
/// a0 + a1 t + a2 t^2 > 0 for every t in [0, 1].
PathSignResult path_sign_check(const HomoPoly& a0, const HomoPoly& a1, const HomoPoly& a2);

/// Path Q II_P + 2t dP dQ. Requires P hyperbolic, Q positive on the punctured
/// plane and bracket(P, Q) <= 0; throws PreconditionFailed otherwise.
IsotopyCertificate direct_path_certify(const HomoPoly& p, const HomoPoly& q);

/// Path omega + t delta with omega = Q II_P + 2 dP dQ and delta = P II_Q.
IsotopyCertificate product_path_certify(const HomoPoly& p, const HomoPoly& q);

/// II_{PQ} and II_P are hyperbolic isotopic. Checks every hypothesis
/// (P hyperbolic, Q elliptic and positive, PQ hyperbolic, bracket <= 0) and
/// throws PreconditionFailed naming the first one that fails.
IsotopyCertificate isotopy_certify(const HomoPoly& p, const HomoPoly& q);

}  // namespace hesstop
