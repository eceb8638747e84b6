#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace basilica::dynamics {

using Complex = std::complex<double>;

// A path is the polyline through its samples, parametrised uniformly by
// sample index.
struct Path {
  std::vector<Complex> z;

  Complex front() const { return z.front(); }
  Complex back() const { return z.back(); }
  std::size_t size() const { return z.size(); }
  bool closed(double tol) const { return !z.empty() && std::abs(z.front() - z.back()) <= tol; }
  double max_step() const;
  double length() const;
};

Path segment(Complex from, Complex to, std::size_t samples);

/// Arc around `center` from `from` to `to`, radius interpolated linearly,
/// turning by `sweep` radians (positive is counter-clockwise) in total.
Path arc(Complex center, Complex from, Complex to, double sweep, std::size_t samples);

/// Straight in from `base` to distance `radius` of `center`, once round the
/// circle counter-clockwise, and back out.
Path stadium_loop(Complex base, Complex center, double radius, std::size_t samples);

Path concat(const Path& first, const Path& second);
Path reversed(const Path& p);

/// Drops samples closer than `spacing` to the last kept one; endpoints stay.
Path thinned(const Path& p, double spacing);

struct LiftOptions {
  double tol = 1e-9;           // start point and branch-point clearance
  double max_step = 0.05;      // lifted samples further apart trigger refinement
  double margin_factor = 10;   // branch margin below this many eps triggers refinement
  unsigned max_refinement = 40;
};

/// Lift of `path` through z -> z^2 + c starting at `start`, choosing at each
/// sample the square root of (w - c) closest to the previous lifted point.
/// Base segments are bisected when the lifted step is too long or the
/// choice is nearly ambiguous.
/// Throws PreconditionError if f(start) is not path(0) or the path comes
/// within tol of the critical value c; NumericError when refinement fails.
Path lift_path(Complex c, const Path& path, Complex start, const LiftOptions& options = {});

}  // namespace basilica::dynamics
