#pragma once

#include <string>
#include <vector>

#include "hesstop/quadform.hpp"

namespace hesstop {

/// Double-precision view of a QuadForm for fast pointwise evaluation.
class NumericForm {
 public:
  explicit NumericForm(const QuadForm& w);
  /// (A, B, C) at (x, y).
  std::array<double, 3> eval(double x, double y) const;
  int degree() const { return degree_; }

 private:
  static double horner(const std::vector<double>& c, double x, double y);
  std::vector<double> a_, b_, c_;
  int degree_;
};

/// The two solution lines of A du^2 + 2B du dv + C dv^2 = 0, as angles in
/// [0, pi). `plus` and `minus` are the branches 2 theta = psi +/- alpha with
/// psi = arg((A - C)/2 + iB) and alpha = arg(-(A + C)/2 + i sqrt(B^2 - AC));
/// each branch is a continuous line field wherever the form is hyperbolic.
struct LinePair {
  double plus;
  double minus;
};

enum class Branch { Plus, Minus };

/// Throws NotHyperbolicHere unless B^2 - AC > 0 beyond rounding.
LinePair asymptotic_directions(const NumericForm& w, double x, double y);
LinePair asymptotic_directions(const QuadForm& w, double x, double y);

inline double branch_angle(const LinePair& p, Branch b) { return b == Branch::Plus ? p.plus : p.minus; }

/// Distance between two lines given by angles, in [0, pi/2].
double line_distance(double a, double b);

/// The candidate closest to `prev` in the metric of lines (angles mod pi).
/// Throws AmbiguousBranch when both are equidistant within 1e-9.
double branch_continuation(double prev, const LinePair& pair);

struct DirectionSample {
  double phi;       ///< position angle on the circle
  double theta;     ///< tracked line angle in [0, pi)
  double doubled;   ///< unwrapped doubled angle 2 theta
};

struct DirectionTrace {
  std::vector<DirectionSample> samples;
  int refinement_depth = 0;
};

/// Index n/2 of a line field at an isolated singularity.
struct HalfIndex {
  long numerator = 0;
  double residual = 0.0;  ///< |raw winding - n/2|

  /// "p/2" (or "p" when the index is an integer).
  std::string to_string() const;
  friend bool operator==(const HalfIndex& a, const HalfIndex& b) { return a.numerator == b.numerator; }
};

struct IndexOptions {
  int n_initial = 1024;
  Branch branch = Branch::Plus;
  double radius = 1.0;
  int max_depth = 20;
};

struct IndexResult {
  HalfIndex index;
  DirectionTrace trace;
  std::size_t samples_used = 0;
};

/// Index at the origin of the asymptotic line field of a form hyperbolic on
/// the punctured plane: tracks one branch around the circle of the given
/// radius by continuation, bisecting any step whose doubled-angle jump exceeds
/// pi/2, and rounds the doubled-angle winding / (4 pi) to a half-integer.
/// Throws RefinementLimit past max_depth, or when the residual reaches 0.05.
IndexResult index_at_origin(const QuadForm& w, const IndexOptions& options = {});

}  // namespace hesstop
