#include "basilica/path.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "basilica/error.hpp"

namespace basilica::dynamics {

double Path::max_step() const {
  double m = 0;
  for (std::size_t i = 1; i < z.size(); ++i) m = std::max(m, std::abs(z[i] - z[i - 1]));
  return m;
}

double Path::length() const {
  double total = 0;
  for (std::size_t i = 1; i < z.size(); ++i) total += std::abs(z[i] - z[i - 1]);
  return total;
}

Path segment(Complex from, Complex to, std::size_t samples) {
  if (samples < 2) samples = 2;
  Path p;
  p.z.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
    p.z.push_back(from + t * (to - from));
  }
  p.z.back() = to;
  return p;
}

Path arc(Complex center, Complex from, Complex to, double sweep, std::size_t samples) {
  if (samples < 2) samples = 2;
  const double r0 = std::abs(from - center), r1 = std::abs(to - center);
  const double theta0 = std::arg(from - center);
  Path p;
  p.z.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
    p.z.push_back(center + std::polar(r0 + t * (r1 - r0), theta0 + t * sweep));
  }
  p.z.front() = from;
  p.z.back() = to;
  return p;
}

Path stadium_loop(Complex base, Complex center, double radius, std::size_t samples) {
  const Complex dir = (base - center) / std::abs(base - center);
  const Complex touch = center + radius * dir;
  const double straight = std::abs(base - touch);
  const double round = 2 * std::numbers::pi * radius;
  const auto share = [&](double len) {
    return std::max<std::size_t>(
        2, static_cast<std::size_t>(std::ceil(samples * len / (2 * straight + round))));
  };
  Path in = segment(base, touch, share(straight));
  Path circle = arc(center, touch, touch, 2 * std::numbers::pi, share(round));
  return concat(concat(in, circle), reversed(in));
}

Path concat(const Path& first, const Path& second) {
  Path p = first;
  if (!p.z.empty() && !second.z.empty() && p.z.back() == second.z.front())
    p.z.insert(p.z.end(), second.z.begin() + 1, second.z.end());
  else
    p.z.insert(p.z.end(), second.z.begin(), second.z.end());
  return p;
}

Path reversed(const Path& p) { return Path{{p.z.rbegin(), p.z.rend()}}; }

Path thinned(const Path& p, double spacing) {
  if (p.z.size() <= 2) return p;
  Path out;
  out.z.push_back(p.z.front());
  for (std::size_t i = 1; i + 1 < p.z.size(); ++i)
    if (std::abs(p.z[i] - out.z.back()) >= spacing) out.z.push_back(p.z[i]);
  out.z.push_back(p.z.back());
  return out;
}

namespace {

class Lifter {
 public:
  Lifter(Complex c, const LiftOptions& options) : c_(c), options_(options) {}

  void check_clearance(Complex w) const {
    if (std::abs(w - c_) <= options_.tol) {
      std::ostringstream msg;
      msg << "lift_path: path passes within " << options_.tol << " of the critical value at " << w;
      throw PreconditionError(msg.str());
    }
  }

  // Appends lifted points for the base segment (w0, w1], w0 already lifted
  // to out.back().
  void step(Complex w0, Complex w1, Path& out, unsigned depth) {
    check_clearance(w1);
    const Complex prev = out.z.back();
    const Complex root = std::sqrt(w1 - c_);
    const double plus = std::abs(root - prev), minus = std::abs(-root - prev);
    const Complex chosen = plus <= minus ? root : -root;
    const double margin = std::abs(plus - minus);
    const double eps = std::numeric_limits<double>::epsilon();
    const bool ambiguous = margin < options_.margin_factor * eps * std::max(1.0, std::abs(root));
    const bool too_long = std::abs(chosen - prev) > options_.max_step;
    if (ambiguous || too_long) {
      if (depth >= options_.max_refinement) {
        std::ostringstream msg;
        msg << "lift_path: refinement failed near " << w1 << " (margin " << margin << ")";
        throw NumericError(msg.str());
      }
      const Complex mid = 0.5 * (w0 + w1);
      step(w0, mid, out, depth + 1);
      step(mid, w1, out, depth + 1);
      return;
    }
    out.z.push_back(chosen);
  }

 private:
  Complex c_;
  const LiftOptions& options_;
};

}  // namespace

Path lift_path(Complex c, const Path& path, Complex start, const LiftOptions& options) {
  if (path.z.empty()) throw PreconditionError("lift_path: empty path");
  const Complex image = start * start + c;
  if (std::abs(image - path.z.front()) > options.tol * std::max(1.0, std::abs(image))) {
    std::ostringstream msg;
    msg << "lift_path: start " << start << " does not map to the path origin " << path.z.front();
    throw PreconditionError(msg.str());
  }
  Lifter lifter(c, options);
  lifter.check_clearance(path.z.front());
  Path out;
  out.z.reserve(path.z.size());
  out.z.push_back(start);
  for (std::size_t i = 1; i < path.z.size(); ++i) lifter.step(path.z[i - 1], path.z[i], out, 0);
  return out;
}

}  // namespace basilica::dynamics
