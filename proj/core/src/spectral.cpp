#include "basilica/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <sstream>

#include "basilica/error.hpp"

namespace basilica::spectral {

LevelRep build_rep(unsigned n) {
  if (n > kMaxRepLevel)
    throw ResourceError("build_rep: level " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxRepLevel));
  LevelRep rep;
  rep.a = {0};
  rep.b = {0};
  for (unsigned level = 0; level < n; ++level) {
    const std::uint32_t half = static_cast<std::uint32_t>(rep.a.size());
    Permutation a(2 * half), b(2 * half);
    for (std::uint32_t u = 0; u < half; ++u) {
      a[u] = half + rep.b[u];
      a[half + u] = u;
      b[u] = rep.a[u];
      b[half + u] = half + u;
    }
    rep.a = std::move(a);
    rep.b = std::move(b);
  }
  rep.n = n;
  return rep;
}

Eigen::MatrixXd markov_operator(const Permutation& a, const Permutation& b) {
  const Eigen::Index size = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index u = 0; u < size; ++u) {
    m(u, a[u]) += 0.25;
    m(a[u], u) += 0.25;
    m(u, b[u]) += 0.25;
    m(b[u], u) += 0.25;
  }
  return m;
}

Eigen::MatrixXd markov_operator(const LevelRep& rep) {
  if (rep.n > kMaxDenseLevel)
    throw ResourceError("markov_operator: level " + std::to_string(rep.n) +
                        " exceeds dense cap " + std::to_string(kMaxDenseLevel));
  return markov_operator(rep.a, rep.b);
}

SpectralPoint apply_F(const SpectralPoint& p) {
  return {p.lambda * p.lambda + 2 * p.lambda * p.nu - 2 * p.mu * p.mu,
          p.lambda * p.nu + 2 * p.nu * p.nu, -p.mu * p.mu};
}

double q0(const SpectralPoint& p) { return p.lambda + 2 * p.mu + 2 * p.nu; }

double q1_factor(const SpectralPoint& p) { return p.lambda - 2 * p.mu + 2 * p.nu; }

double eval_Q(const SpectralPoint& p, unsigned n) {
  double value;
  if (n == 0) {
    value = q0(p);
  } else {
    SpectralPoint q = p;
    for (unsigned k = 1; k < n; ++k) q = apply_F(q);
    value = q0(q) * q1_factor(q);
  }
  if (!std::isfinite(value))
    throw NumericError("eval_Q: non-finite value at level " + std::to_string(n));
  return value;
}

double q_by_determinant(const SpectralPoint& p, const LevelRep& rep) {
  const Eigen::Index size = static_cast<Eigen::Index>(rep.a.size());
  Eigen::MatrixXd m = p.lambda * Eigen::MatrixXd::Identity(size, size);
  for (Eigen::Index u = 0; u < size; ++u) {
    m(u, rep.a[u]) += p.mu;
    m(rep.a[u], u) += p.mu;
    m(u, rep.b[u]) += p.nu;
    m(rep.b[u], u) += p.nu;
  }
  return m.partialPivLu().determinant();
}

std::vector<Eigenvalue> cluster(const std::vector<double>& sorted, double tol) {
  std::vector<Eigenvalue> out;
  double sum = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] - sorted[i - 1] > tol) {
      out.back().value = sum / static_cast<double>(out.back().multiplicity);
      sum = 0;
    }
    if (i == 0 || sorted[i] - sorted[i - 1] > tol) out.push_back({0, 0});
    sum += sorted[i];
    ++out.back().multiplicity;
  }
  if (!out.empty()) out.back().value = sum / static_cast<double>(out.back().multiplicity);
  return out;
}

std::vector<std::pair<double, double>> gaps_of(const std::vector<Eigenvalue>& distinct,
                                               double min_width) {
  std::vector<std::pair<double, double>> out;
  double left = -1.0;
  for (const Eigenvalue& e : distinct) {
    if (e.value - left > min_width) out.emplace_back(left, e.value);
    left = e.value;
  }
  if (1.0 - left > min_width) out.emplace_back(left, 1.0);
  return out;
}

SpectrumReport spectrum_of(const Eigen::MatrixXd& m, unsigned n, const SpectrumOptions& options) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigen_spectrum: eigensolver did not converge at level " +
                       std::to_string(n));
  const Eigen::MatrixXd& v = solver.eigenvectors();
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd residual = m * v - v * values.asDiagonal();

  SpectrumReport report;
  report.n = n;
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    const double r = residual.col(j).norm() / v.col(j).norm();
    report.max_residual = std::max(report.max_residual, r);
    report.eigenvalues.push_back(values[j]);
  }
  if (report.max_residual > options.residual_tol) {
    std::ostringstream msg;
    msg << "eigen_spectrum: residual " << report.max_residual << " above " << options.residual_tol
        << " at level " << n;
    throw NumericError(msg.str());
  }
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
  report.distinct = cluster(report.eigenvalues, options.cluster_tol);
  report.gaps = gaps_of(report.distinct, options.min_gap);
  return report;
}

SpectrumReport eigen_spectrum(unsigned n, const SpectrumOptions& options) {
  return spectrum_of(markov_operator(build_rep(n)), n, options);
}

namespace {

// Projective renormalisation; signs are preserved.
SpectralPoint normalised(SpectralPoint p) {
  const double scale = std::max({std::abs(p.lambda), std::abs(p.mu), std::abs(p.nu)});
  if (scale > 0) {
    p.lambda /= scale;
    p.mu /= scale;
    p.nu /= scale;
  }
  return p;
}

SpectralPoint on_line(double lambda) { return normalised({lambda, -0.25, -0.25}); }

// Factor `k` of Q_n on the line: k < 0 is Q_0, otherwise L o F^k.
double factor_value(int k, double lambda) {
  SpectralPoint p = on_line(lambda);
  if (k < 0) return q0(p);
  for (int i = 0; i < k; ++i) p = normalised(apply_F(p));
  return q1_factor(p);
}

double bisect(int k, double lo, double hi, double flo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = factor_value(k, mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RootReport q_root_spectrum(unsigned n, std::uint64_t grid, double tol) {
  if (grid < 2) throw PreconditionError("q_root_spectrum: grid needs at least 2 intervals");
  if (!(tol > 0)) throw PreconditionError("q_root_spectrum: tolerance must be positive");
  RootReport report;
  report.n = n;

  const int factors = static_cast<int>(n) + 1;  // Q_0 and L o F^k for k < n
  const double step = 2.0 / static_cast<double>(grid);
  std::vector<double> prev(factors), prev2(factors);
  std::vector<double> roots;
  char buf[160];

  for (std::uint64_t i = 0; i <= grid; ++i) {
    const double lambda = i == grid ? 1.0 : -1.0 + step * static_cast<double>(i);
    SpectralPoint p = on_line(lambda);
    for (int f = 0; f < factors; ++f) {
      const int k = f - 1;
      if (k > 0) p = normalised(apply_F(p));
      const double value = k < 0 ? q0(p) : q1_factor(p);
      if (value == 0) {
        roots.push_back(lambda);
      } else if (i > 0 && prev[f] != 0 && (value < 0) != (prev[f] < 0)) {
        roots.push_back(bisect(k, lambda - step, lambda, prev[f], tol));
      } else if (i > 1 && prev[f] != 0 && prev2[f] != 0 && (value < 0) == (prev[f] < 0) &&
                 (prev2[f] < 0) == (prev[f] < 0) && std::abs(prev[f]) < std::abs(value) &&
                 std::abs(prev[f]) < std::abs(prev2[f])) {
        // Local extremum of |factor| without a sign change: check whether
        // the interpolating parabola dips through zero.
        const double curvature = value - 2 * prev[f] + prev2[f];
        const double slope = 0.5 * (value - prev2[f]);
        const double vertex = prev[f] - slope * slope / (2 * curvature);
        if ((vertex < 0) != (prev[f] < 0) || vertex == 0) {
          std::snprintf(buf, sizeof buf,
                        "possible tangential root of factor %d near %.12g (grid step %.3g)", k,
                        lambda - step, step);
          report.warnings.emplace_back(buf);
        }
      }
      prev2[f] = prev[f];
      prev[f] = value;
    }
  }
  std::sort(roots.begin(), roots.end());
  const double merge = std::max(10 * tol, 1e-9);
  for (double r : roots)
    if (report.roots.empty() || r - report.roots.back() > merge) report.roots.push_back(r);
  return report;
}

namespace {

double nearest(const std::vector<double>& sorted, double x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  double best = INFINITY;
  if (it != sorted.end()) best = *it - x;
  if (it != sorted.begin()) best = std::min(best, x - *std::prev(it));
  return best;
}

}  // namespace

double support_distance(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.empty() && y.empty()) return 0;
  double worst = 0;
  for (double v : x) worst = std::max(worst, nearest(y, v));
  for (double v : y) worst = std::max(worst, nearest(x, v));
  return worst;
}

std::vector<double> support(const SpectrumReport& report) {
  std::vector<double> out;
  for (const Eigenvalue& e : report.distinct) out.push_back(e.value);
  return out;
}

namespace {

// A point on the orbit together with its derivative in lambda.
struct Jet {
  SpectralPoint p;
  SpectralPoint dp;
};

Jet normalised(Jet j) {
  const double m[3] = {j.p.lambda, j.p.mu, j.p.nu};
  const double dm[3] = {j.dp.lambda, j.dp.mu, j.dp.nu};
  int arg = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(m[i]) > std::abs(m[arg])) arg = i;
  const double s = std::abs(m[arg]);
  if (s == 0) return j;
  const double ds = m[arg] < 0 ? -dm[arg] : dm[arg];
  auto scale = [&](double x, double dx) { return std::make_pair(x / s, dx / s - x * ds / (s * s)); };
  auto [l, dl] = scale(j.p.lambda, j.dp.lambda);
  auto [u, du] = scale(j.p.mu, j.dp.mu);
  auto [v, dv] = scale(j.p.nu, j.dp.nu);
  return {{l, u, v}, {dl, du, dv}};
}

Jet apply_F(const Jet& j) {
  const SpectralPoint& p = j.p;
  const SpectralPoint& d = j.dp;
  return {spectral::apply_F(p),
          {2 * p.lambda * d.lambda + 2 * (d.lambda * p.nu + p.lambda * d.nu) - 4 * p.mu * d.mu,
           d.lambda * p.nu + p.lambda * d.nu + 4 * p.nu * d.nu, -2 * p.mu * d.mu}};
}

// Newton estimate of the lambda-distance to the zero set of a linear form.
double distance(double value, double slope) {
  if (value == 0) return 0;
  return slope == 0 ? INFINITY : std::abs(value / slope);
}

}  // namespace

OrbitHit forward_orbit_membership(double lambda, unsigned max_iter, double tol) {
  Jet j = normalised(Jet{{lambda, -0.25, -0.25}, {1, 0, 0}});
  for (unsigned k = 0; k <= max_iter; ++k) {
    if (k > 0) j = normalised(apply_F(j));
    const double d0 = k == 0 ? distance(q0(j.p), q0(j.dp)) : INFINITY;
    const double d1 = distance(q1_factor(j.p), q1_factor(j.dp));
    if (std::min(d0, d1) <= tol) return {true, k};
  }
  return {false, 0};
}

std::vector<Bin> spectral_measure(const SpectrumReport& report, unsigned bins) {
  if (bins == 0) throw PreconditionError("spectral_measure: bins must be positive");
  std::vector<Bin> out(bins);
  const double width = 2.0 / bins;
  for (unsigned i = 0; i < bins; ++i) {
    out[i].left = -1.0 + width * i;
    out[i].right = i + 1 == bins ? 1.0 : -1.0 + width * (i + 1);
  }
  const double unit = 1.0 / static_cast<double>(report.eigenvalues.size());
  for (double x : report.eigenvalues) {
    auto idx = static_cast<long>(std::floor((x + 1.0) / width));
    idx = std::clamp(idx, 0L, static_cast<long>(bins) - 1);
    out[idx].mass += unit;
  }
  return out;
}

std::string measure_csv(const std::vector<Bin>& bins) {
  std::string out = "bin_left,bin_right,mass\n";
  char buf[96];
  for (const Bin& b : bins) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", b.left, b.right, b.mass);
    out += buf;
  }
  return out;
}

std::string eigenvalues_csv(const SpectrumReport& report) {
  std::string out = "value,multiplicity\n";
  char buf[64];
  for (const Eigenvalue& e : report.distinct) {
    // Cluster means of exact zeros can come out as -0 or 1e-17.
    const double v = std::abs(e.value) < 1e-13 ? 0.0 : e.value;
    std::snprintf(buf, sizeof buf, "%.12f,%llu\n", v,
                  static_cast<unsigned long long>(e.multiplicity));
    out += buf;
  }
  return out;
}

GapPersistence gap_persistence(unsigned first, unsigned last, const SpectrumOptions& options) {
  if (first > last) throw PreconditionError("gap_persistence: first level after last");
  GapPersistence out;
  out.first = first;
  out.last = last;
  std::vector<SpectrumReport> reports;
  for (unsigned n = first; n <= last; ++n) reports.push_back(eigen_spectrum(n, options));
  for (const auto& gap : reports.front().gaps) {
    GapTrack track{gap, {}};
    for (const SpectrumReport& r : reports) {
      double widest = 0;
      for (const auto& g : r.gaps) {
        const double lo = std::max(g.first, gap.first), hi = std::min(g.second, gap.second);
        widest = std::max(widest, hi - lo);
      }
      track.widest_inside.push_back(widest);
    }
    if (track.widest_inside.back() >= options.min_gap) ++out.persistent;
    out.tracks.push_back(std::move(track));
  }
  return out;
}

}  // namespace basilica::spectral
