#pragma once

#include <string>
#include <vector>

#include "hesstop/lineindex.hpp"

namespace hesstop {

struct Point2 {
  double x;
  double y;
};

/// Integral curves of one asymptotic branch inside an annulus.
struct CurveSet {
  std::vector<std::vector<Point2>> curves;
  std::vector<double> separatrix_angles;  ///< sorted, in [0, 2 pi)
  int sector_count = 0;
  double r_min = 0.05;
  double r_max = 2.0;
};

struct FoliationOptions {
  int seeds = 24;
  double step = 1e-3;  ///< arc length per RK4 step
  double r_min = 0.05;
  double r_max = 2.0;
  int max_steps = 20000;  ///< per direction from each seed
};

/// Unit direction of the chosen branch at (x, y), oriented to agree with
/// `reference` (positive inner product).
Point2 branch_direction(const NumericForm& w, Branch branch, double x, double y, Point2 reference);

/// Traces the branch line field from `seeds` points of the unit circle in both
/// directions with fixed-step RK4, clipped to the annulus [r_min, r_max].
CurveSet trace_foliation(const QuadForm& w, Branch branch, const FoliationOptions& options = {});

/// Rays from the origin that are leaves of the foliation.
///
/// A ray at angle phi is invariant for a branch when that branch's line at
/// (cos phi, sin phi) is radial. Counts are rays, not full lines: a line
/// through the origin contributes two rays.
struct SeparatrixReport {
  std::vector<double> plus;        ///< radial angles of the Plus branch
  std::vector<double> minus;       ///< radial angles of the Minus branch
  std::vector<double> all_angles;  ///< union of both, sorted

  /// Rays of a single foliation; the two branches always agree on this count.
  int count() const { return static_cast<int>(plus.size()); }
  int union_count() const { return static_cast<int>(all_angles.size()); }
};

/// Locates sign changes of sin(2 theta - 2 phi) on a `samples`-point sweep,
/// bisects them to `tolerance` and keeps the radial ones (cos > 0).
SeparatrixReport count_separatrices(const QuadForm& w, int samples = 4096, double tolerance = 1e-8);

std::string curves_to_svg(const CurveSet& curves);
std::string curves_to_csv(const CurveSet& curves);

}  // namespace hesstop
