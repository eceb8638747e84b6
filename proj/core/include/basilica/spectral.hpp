#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "basilica/wreath.hpp"

namespace basilica::spectral {

// Permutation representation of the generators on level n of the tree and
// the three-variable polynomials
//   Q_n(l, m, v) = det(l + m (A + A^T) + v (B + B^T)),
// which at m = v = -1/4 give the characteristic polynomial of the Markov
// operator M = (A + A^T + B + B^T) / 4. Q_n is only ever evaluated at points,
// through Q_{n+1} = Q_n o F.

inline constexpr unsigned kMaxRepLevel = 13;
inline constexpr unsigned kMaxDenseLevel = 12;

struct LevelRep {
  unsigned n = 0;
  Permutation a;  // row u of the matrix has its 1 in column a[u]
  Permutation b;
};

/// Block recursion starting from the trivial representation on one point.
/// Throws ResourceError above kMaxRepLevel.
LevelRep build_rep(unsigned n);

Eigen::MatrixXd markov_operator(const LevelRep& rep);
Eigen::MatrixXd markov_operator(const Permutation& a, const Permutation& b);

struct SpectralPoint {
  double lambda = 0;
  double mu = 0;
  double nu = 0;

  friend bool operator==(const SpectralPoint&, const SpectralPoint&) = default;
};

/// F(l, m, v) = (l^2 + 2 l v - 2 m^2, l v + 2 v^2, -m^2).
SpectralPoint apply_F(const SpectralPoint& p);

/// Q_0 = l + 2m + 2v.
double q0(const SpectralPoint& p);
/// Second factor of Q_1 = Q_0 (l - 2m + 2v).
double q1_factor(const SpectralPoint& p);

/// Q_n by iterating F. Throws NumericError when the value is not finite.
double eval_Q(const SpectralPoint& p, unsigned n);

/// Q_n from the determinant of the level-n matrix (LU).
double q_by_determinant(const SpectralPoint& p, const LevelRep& rep);

struct Eigenvalue {
  double value = 0;
  std::uint64_t multiplicity = 0;
};

struct SpectrumReport {
  unsigned n = 0;
  std::vector<double> eigenvalues;  // sorted, with multiplicity
  std::vector<Eigenvalue> distinct;
  std::vector<std::pair<double, double>> gaps;  // open intervals in [-1, 1]
  double max_residual = 0;
};

struct SpectrumOptions {
  double cluster_tol = 1e-6;
  double residual_tol = 1e-8;
  double min_gap = 1e-3;  // narrower gaps are not reported
};

/// Dense symmetric eigensolve of the Markov operator with a residual check.
/// Throws NumericError on non-convergence or a residual above tolerance.
SpectrumReport eigen_spectrum(unsigned n, const SpectrumOptions& options = {});
SpectrumReport spectrum_of(const Eigen::MatrixXd& m, unsigned n,
                           const SpectrumOptions& options = {});

std::vector<Eigenvalue> cluster(const std::vector<double>& sorted, double tol);
std::vector<std::pair<double, double>> gaps_of(const std::vector<Eigenvalue>& distinct,
                                               double min_width);

struct RootReport {
  unsigned n = 0;
  std::vector<double> roots;         // sorted; roots closer than 1e-9 merged
  std::vector<std::string> warnings;  // suspected tangential roots
};

/// max over each set of the distance to the nearest member of the other
/// (both sorted). Infinity when exactly one is empty.
double support_distance(const std::vector<double>& x, const std::vector<double>& y);
std::vector<double> support(const SpectrumReport& report);

/// Roots of Q_n(l, -1/4, -1/4) on [-1, 1]. Q_n factors as
/// Q_0 . prod_k L(F^k(.)) with L the second factor of Q_1; each factor is
/// scanned on a uniform grid, sign changes are refined by bisection, and
/// points are renormalised after each F step (Q_n is homogeneous).
RootReport q_root_spectrum(unsigned n, std::uint64_t grid = 1000000,
                           double tol = 1e-12);

struct OrbitHit {
  bool hit = false;
  unsigned first_hit = 0;
};

/// Iterates F from (l, -1/4, -1/4) and reports the first iterate within
/// `tol` of {Q_1 = 0}, the distance being measured in l (a Newton step on
/// the pulled-back factor). A hit at step k means l is within about `tol`
/// of a root of Q_{k+1}.
OrbitHit forward_orbit_membership(double lambda, unsigned max_iter, double tol);

struct Bin {
  double left = 0;
  double right = 0;
  double mass = 0;
};

/// Normalised counting measure of the spectrum binned over [-1, 1]. The
/// last bin is closed on the right.
std::vector<Bin> spectral_measure(const SpectrumReport& report, unsigned bins);
std::string measure_csv(const std::vector<Bin>& bins);
std::string eigenvalues_csv(const SpectrumReport& report);

struct GapTrack {
  std::pair<double, double> gap;            // at the first level
  std::vector<double> widest_inside;        // per level, widest gap inside
};

struct GapPersistence {
  unsigned first = 0;
  unsigned last = 0;
  std::vector<GapTrack> tracks;
  std::size_t persistent = 0;  // tracks still holding a gap >= min_gap at the last level
};

/// Follows every gap of level `first` through the later levels. The spectra
/// nest, so a gap can only split or shrink.
GapPersistence gap_persistence(unsigned first, unsigned last,
                               const SpectrumOptions& options = {});

}  // namespace basilica::spectral
