#include "basilica/point_cloud.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "basilica/error.hpp"

namespace basilica::dynamics {

NearestIndex::NearestIndex(const PointCloud& points) : points_(points) {
  if (points.empty()) throw PreconditionError("nearest-neighbour index over an empty cloud");
  double x1 = points[0].real(), y1 = points[0].imag();
  x0_ = x1;
  y0_ = y1;
  for (const auto& z : points) {
    x0_ = std::min(x0_, z.real());
    y0_ = std::min(y0_, z.imag());
    x1 = std::max(x1, z.real());
    y1 = std::max(y1, z.imag());
  }
  const double w = std::max(x1 - x0_, 1e-12), h = std::max(y1 - y0_, 1e-12);
  cell_ = std::sqrt(w * h / static_cast<double>(points.size())) * 2;
  cell_ = std::max({cell_, w / 4096, h / 4096, 1e-12});
  nx_ = static_cast<long>(w / cell_) + 1;
  ny_ = static_cast<long>(h / cell_) + 1;

  std::vector<std::size_t> bucket(points.size());
  start_.assign(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const long cx = std::min(nx_ - 1, static_cast<long>((points[i].real() - x0_) / cell_));
    const long cy = std::min(ny_ - 1, static_cast<long>((points[i].imag() - y0_) / cell_));
    bucket[i] = static_cast<std::size_t>(cy * nx_ + cx);
    ++start_[bucket[i] + 1];
  }
  for (std::size_t b = 1; b < start_.size(); ++b) start_[b] += start_[b - 1];
  order_.resize(points.size());
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) order_[fill[bucket[i]]++] = i;
}

std::pair<std::size_t, double> NearestIndex::nearest(std::complex<double> q) const {
  const long cx = static_cast<long>(std::floor((q.real() - x0_) / cell_));
  const long cy = static_cast<long>(std::floor((q.imag() - y0_) / cell_));
  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  auto scan = [&](long x, long y) {
    if (x < 0 || y < 0 || x >= nx_ || y >= ny_) return;
    const std::size_t b = static_cast<std::size_t>(y * nx_ + x);
    for (std::size_t k = start_[b]; k < start_[b + 1]; ++k) {
      const double d = std::abs(points_[order_[k]] - q);
      if (d < best || (d == best && order_[k] < arg)) {
        best = d;
        arg = order_[k];
      }
    }
  };
  // Rings are clamped to the grid; cells in ring r+1 are at least r cells
  // away from q's cell.
  const long first = std::max({0L, -cx, cx - (nx_ - 1), -cy, cy - (ny_ - 1)});
  const long last = first + std::max(nx_, ny_);
  for (long r = first; r <= last; ++r) {
    if (r == 0) {
      scan(cx, cy);
    } else {
      const long x_lo = std::max(cx - r, 0L), x_hi = std::min(cx + r, nx_ - 1);
      const long y_lo = std::max(cy - r + 1, 0L), y_hi = std::min(cy + r - 1, ny_ - 1);
      for (long x = x_lo; x <= x_hi; ++x) {
        scan(x, cy - r);
        scan(x, cy + r);
      }
      for (long y = y_lo; y <= y_hi; ++y) {
        scan(cx - r, y);
        scan(cx + r, y);
      }
    }
    if (best <= static_cast<double>(r) * cell_) break;
  }
  return {arg, best};
}

double directed_hausdorff(const PointCloud& p, const PointCloud& q) {
  NearestIndex index(q);
  double worst = 0;
  for (const auto& z : p) worst = std::max(worst, index.nearest(z).second);
  return worst;
}

double hausdorff_distance(const PointCloud& p, const PointCloud& q) {
  if (p.empty() || q.empty()) throw PreconditionError("hausdorff_distance: empty point cloud");
  return std::max(directed_hausdorff(p, q), directed_hausdorff(q, p));
}

double hausdorff_brute_force(const PointCloud& p, const PointCloud& q) {
  if (p.empty() || q.empty()) throw PreconditionError("hausdorff_distance: empty point cloud");
  auto directed = [](const PointCloud& from, const PointCloud& to) {
    double worst = 0;
    for (const auto& z : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& w : to) best = std::min(best, std::abs(z - w));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(p, q), directed(q, p));
}

double min_pairwise_distance(const PointCloud& p) {
  if (p.size() < 2) return std::numeric_limits<double>::infinity();
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return p[i].real() < p[j].real(); });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (p[order[j]].real() - p[order[i]].real() >= best) break;
      best = std::min(best, std::abs(p[order[i]] - p[order[j]]));
    }
  }
  return best;
}

std::string cloud_csv(const PointCloud& p, const std::vector<std::string>& labels) {
  std::string out = labels.empty() ? "re,im\n" : "re,im,address\n";
  char buf[80];
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", p[i].real(), p[i].imag());
    out += buf;
    if (!labels.empty()) out += "," + labels[i];
    out += "\n";
  }
  return out;
}

namespace {

double parse_number(std::string_view field, std::size_t line) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value))
    throw InputError("point cloud csv: bad number '" + std::string(field) + "' on line " +
                     std::to_string(line));
  return value;
}

}  // namespace

PointCloud read_cloud_csv(std::string_view text) {
  PointCloud out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (line.empty() || line == "\r") continue;
    if (line_no == 1 && line.find_first_of("0123456789") == std::string_view::npos) continue;
    const std::size_t c1 = line.find(',');
    if (c1 == std::string_view::npos)
      throw InputError("point cloud csv: expected re,im on line " + std::to_string(line_no));
    const std::size_t c2 = line.find(',', c1 + 1);
    const double re = parse_number(line.substr(0, c1), line_no);
    const double im = parse_number(line.substr(c1 + 1, c2 == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : c2 - c1 - 1),
                                   line_no);
    out.emplace_back(re, im);
  }
  return out;
}

}  // namespace basilica::dynamics
