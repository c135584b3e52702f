#include "hesstop/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "hesstop/errors.hpp"
#include "hesstop/parallel.hpp"

namespace hesstop {

namespace {

constexpr double kPi = std::numbers::pi;

Point2 add(Point2 p, Point2 v, double s) { return {p.x + s * v.x, p.y + s * v.y}; }

Point2 normalized(Point2 v) {
  const double n = std::hypot(v.x, v.y);
  return {v.x / n, v.y / n};
}

std::vector<Point2> integrate(const NumericForm& form, Branch branch, Point2 start, Point2 dir,
                              const FoliationOptions& opt) {
  std::vector<Point2> pts;
  Point2 p = start;
  Point2 ref = dir;
  const double h = opt.step;
  for (int i = 0; i < opt.max_steps; ++i) {
    const Point2 k1 = branch_direction(form, branch, p.x, p.y, ref);
    const Point2 p2 = add(p, k1, h / 2);
    const Point2 k2 = branch_direction(form, branch, p2.x, p2.y, k1);
    const Point2 p3 = add(p, k2, h / 2);
    const Point2 k3 = branch_direction(form, branch, p3.x, p3.y, k2);
    const Point2 p4 = add(p, k3, h);
    const Point2 k4 = branch_direction(form, branch, p4.x, p4.y, k3);
    const Point2 v{(k1.x + 2 * k2.x + 2 * k3.x + k4.x) / 6, (k1.y + 2 * k2.y + 2 * k3.y + k4.y) / 6};
    const Point2 next = add(p, v, h);
    const double r = std::hypot(next.x, next.y);
    if (r < opt.r_min || r > opt.r_max) break;
    pts.push_back(next);
    p = next;
    ref = normalized(v);
  }
  return pts;
}

double radial_offset(const NumericForm& form, Branch branch, double phi) {
  const double theta = branch_angle(asymptotic_directions(form, std::cos(phi), std::sin(phi)), branch);
  return 2 * theta - 2 * phi;
}

std::vector<double> radial_angles(const NumericForm& form, Branch branch, int samples, double tolerance) {
  std::vector<double> out;
  auto g = [&](double phi) { return std::sin(radial_offset(form, branch, phi)); };
  const double h = 2 * kPi / samples;
  double prev_phi = 0.5 * h;
  double prev = g(prev_phi);
  for (int i = 1; i <= samples; ++i) {
    const double phi = (i + 0.5) * h;  // wraps past 2 pi to close the sweep
    const double cur = g(phi);
    if ((prev < 0) != (cur < 0) || cur == 0.0) {
      double lo = prev_phi, hi = phi, glo = prev;
      while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm < 0) == (glo < 0) && gm != 0.0) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      const double root = 0.5 * (lo + hi);
      if (std::cos(radial_offset(form, branch, root)) > 0) {
        double a = std::fmod(root, 2 * kPi);
        if (a < 0) a += 2 * kPi;
        out.push_back(a);
      }
    }
    prev_phi = phi;
    prev = cur;
  }
  std::sort(out.begin(), out.end());
  // Sign changes straddling a sample can be reported twice.
  std::vector<double> unique;
  for (double a : out) {
    if (unique.empty() || a - unique.back() > 1e3 * tolerance) unique.push_back(a);
  }
  if (unique.size() > 1 && unique.front() + 2 * kPi - unique.back() <= 1e3 * tolerance) unique.pop_back();
  return unique;
}

}  // namespace

Point2 branch_direction(const NumericForm& w, Branch branch, double x, double y, Point2 reference) {
  const double theta = branch_angle(asymptotic_directions(w, x, y), branch);
  Point2 d{std::cos(theta), std::sin(theta)};
  if (d.x * reference.x + d.y * reference.y < 0) d = {-d.x, -d.y};
  return d;
}

CurveSet trace_foliation(const QuadForm& w, Branch branch, const FoliationOptions& options) {
  if (options.seeds < 1) throw DomainError("trace_foliation needs at least one seed");
  if (!(options.r_min > 0 && options.r_min < 1.0 && options.r_max > 1.0)) {
    throw DomainError("annulus must contain the unit circle");
  }
  const NumericForm form(w);
  CurveSet out;
  out.r_min = options.r_min;
  out.r_max = options.r_max;
  out.curves.resize(static_cast<std::size_t>(options.seeds));
  parallel_for(out.curves.size(), [&](std::size_t i) {
    const double phi = 2 * kPi * (static_cast<double>(i) + 0.5) / options.seeds;
    const Point2 seed{std::cos(phi), std::sin(phi)};
    const double theta = branch_angle(asymptotic_directions(form, seed.x, seed.y), branch);
    const Point2 dir{std::cos(theta), std::sin(theta)};
    std::vector<Point2> back = integrate(form, branch, seed, {-dir.x, -dir.y}, options);
    std::vector<Point2> fwd = integrate(form, branch, seed, dir, options);
    std::vector<Point2>& curve = out.curves[i];
    curve.assign(back.rbegin(), back.rend());
    curve.push_back(seed);
    curve.insert(curve.end(), fwd.begin(), fwd.end());
  });
  const SeparatrixReport rays = count_separatrices(w);
  out.separatrix_angles = branch == Branch::Plus ? rays.plus : rays.minus;
  out.sector_count = static_cast<int>(out.separatrix_angles.size());
  return out;
}

SeparatrixReport count_separatrices(const QuadForm& w, int samples, double tolerance) {
  if (samples < 16) throw DomainError("count_separatrices needs at least 16 samples");
  const NumericForm form(w);
  SeparatrixReport out;
  out.plus = radial_angles(form, Branch::Plus, samples, tolerance);
  out.minus = radial_angles(form, Branch::Minus, samples, tolerance);
  out.all_angles = out.plus;
  out.all_angles.insert(out.all_angles.end(), out.minus.begin(), out.minus.end());
  std::sort(out.all_angles.begin(), out.all_angles.end());
  return out;
}

std::string curves_to_svg(const CurveSet& curves) {
  const double r = curves.r_max * 1.05;
  std::ostringstream os;
  os << std::fixed << std::setprecision(4);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -r << ' ' << -r << ' ' << 2 * r << ' ' << 2 * r
     << "\" width=\"800\" height=\"800\">\n";
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << r / 400 << "\">\n";
  for (std::size_t i = 0; i < curves.curves.size(); ++i) {
    const auto& c = curves.curves[i];
    if (c.size() < 2) continue;
    os << "<path class=\"leaf\" id=\"curve-" << i << "\" stroke=\"#2b5d9b\" d=\"M " << c[0].x << ' ' << c[0].y;
    for (std::size_t k = 1; k < c.size(); ++k) os << " L " << c[k].x << ' ' << c[k].y;
    os << "\"/>\n";
  }
  for (double a : curves.separatrix_angles) {
    os << "<path class=\"separatrix\" stroke=\"#c0392b\" stroke-width=\"" << r / 150 << "\" d=\"M 0 0 L "
       << curves.r_max * std::cos(a) << ' ' << curves.r_max * std::sin(a) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string curves_to_csv(const CurveSet& curves) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "curve_id,x,y\n";
  for (std::size_t i = 0; i < curves.curves.size(); ++i) {
    for (const auto& p : curves.curves[i]) os << i << ',' << p.x << ',' << p.y << '\n';
  }
  return os.str();
}

}  // namespace hesstop
