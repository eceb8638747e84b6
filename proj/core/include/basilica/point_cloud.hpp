#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace basilica::dynamics {

using PointCloud = std::vector<std::complex<double>>;

/// Uniform bucket grid for exact nearest-neighbour queries in the plane.
class NearestIndex {
 public:
  explicit NearestIndex(const PointCloud& points);

  /// Index of a nearest point and its distance.
  std::pair<std::size_t, double> nearest(std::complex<double> q) const;

 private:
  const PointCloud& points_;
  double x0_ = 0, y0_ = 0, cell_ = 1;
  long nx_ = 1, ny_ = 1;
  std::vector<std::size_t> start_;  // bucket offsets into order_
  std::vector<std::size_t> order_;
};

/// sup over p of the distance from p to q.
double directed_hausdorff(const PointCloud& p, const PointCloud& q);
/// Throws PreconditionError when either cloud is empty.
double hausdorff_distance(const PointCloud& p, const PointCloud& q);
double hausdorff_brute_force(const PointCloud& p, const PointCloud& q);

/// Smallest distance between two distinct members.
double min_pairwise_distance(const PointCloud& p);

/// "re,im" per line with a header; an optional label column.
std::string cloud_csv(const PointCloud& p, const std::vector<std::string>& labels = {});
/// Reads the first two columns; skips a header line. Throws InputError on
/// malformed or non-finite rows.
PointCloud read_cloud_csv(std::string_view text);

}  // namespace basilica::dynamics
