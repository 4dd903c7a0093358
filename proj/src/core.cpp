#include "txyz/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace txyz {

namespace {

PointVec iota_range(Point lo, Point hi) {
  PointVec out(static_cast<std::size_t>(hi - lo));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

void check_region(std::span<const Point> region, int n) {
  for (Point p : region) {
    if (p < 0 || p >= n) {
      throw std::invalid_argument("region point " + std::to_string(p) +
                                  " outside [0, " + std::to_string(n) + ")");
    }
  }
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kFull: return "full";
    case CaseTag::kRestrictedRange: return "restricted_range";
    case CaseTag::kInvariantSet: return "invariant_set";
    case CaseTag::kProper: return "proper";
  }
  return "?";
}

Universe::Universe(int n, int m, int k) : n_(n), m_(m), k_(k) {
  if (!(1 <= k && k <= m && m <= n)) {
    std::ostringstream msg;
    msg << "universe requires 1 <= k <= m <= n, got (n, m, k) = (" << n << ", "
        << m << ", " << k << ")";
    throw std::invalid_argument(msg.str());
  }
}

CaseTag Universe::case_tag() const noexcept {
  if (m_ == n_) return k_ == m_ ? CaseTag::kFull : CaseTag::kRestrictedRange;
  return k_ == m_ ? CaseTag::kInvariantSet : CaseTag::kProper;
}

PointVec Universe::x_points() const { return iota_range(0, n_); }
PointVec Universe::y_points() const { return iota_range(0, m_); }
PointVec Universe::z_points() const { return iota_range(0, k_); }
PointVec Universe::y_minus_z() const { return iota_range(k_, m_); }
PointVec Universe::x_minus_y() const { return iota_range(m_, n_); }

std::string to_string(const Universe& u) {
  std::ostringstream out;
  out << "(" << u.n() << ", " << u.m() << ", " << u.k() << ")";
  return out.str();
}

Transformation::Transformation(PointVec images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw std::invalid_argument("transformation needs at least one point");
  }
  const int n = static_cast<int>(images_.size());
  for (Point v : images_) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("image value " + std::to_string(v) +
                                  " outside [0, " + std::to_string(n) + ")");
    }
  }
}

Transformation Transformation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity needs n >= 1");
  return Transformation(iota_range(0, n));
}

Transformation Transformation::parse(std::string_view literal) {
  PointVec images;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = literal.find(',', pos);
    std::string_view token = literal.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad transformation literal: '" +
                                  std::string(literal) + "'");
    }
    images.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Transformation(std::move(images));
}

std::string Transformation::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

ImageSet::ImageSet(int n, PointVec members) : n_(n), points_(std::move(members)) {
  if (n < 1) throw std::invalid_argument("image set needs n >= 1");
  check_region(points_, n_);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool ImageSet::contains(Point p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

KernelPartition::KernelPartition(int n, std::vector<PointVec> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw std::invalid_argument("partition needs n >= 1");
  PointVec seen;
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("partition block is empty");
    check_region(block, n_);
    std::sort(block.begin(), block.end());
    seen.insert(seen.end(), block.begin(), block.end());
  }
  std::sort(seen.begin(), seen.end());
  if (seen != iota_range(0, n_)) {
    throw std::invalid_argument("blocks do not partition [0, " +
                                std::to_string(n_) + ")");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const PointVec& a, const PointVec& b) { return a.front() < b.front(); });
}

Transformation compose(const Transformation& a, const Transformation& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.n()) +
                                " vs " + std::to_string(b.n()));
  }
  PointVec images(a.images().size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = b[a.images()[x]];
  }
  return Transformation(std::move(images));
}

ImageSet image_of(const Transformation& a, std::span<const Point> region) {
  check_region(region, a.n());
  PointVec values;
  values.reserve(region.size());
  for (Point p : region) values.push_back(a[p]);
  return ImageSet(a.n(), std::move(values));
}

KernelPartition kernel_of(const Transformation& a) {
  std::unordered_map<Point, PointVec> buckets;
  for (Point x = 0; x < a.n(); ++x) buckets[a[x]].push_back(x);
  std::vector<PointVec> blocks;
  blocks.reserve(buckets.size());
  for (auto& [value, block] : buckets) blocks.push_back(std::move(block));
  return KernelPartition(a.n(), std::move(blocks));
}

bool agree_on(const Transformation& a, const Transformation& b,
              std::span<const Point> region) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.n()) +
                                " vs " + std::to_string(b.n()));
  }
  check_region(region, a.n());
  for (Point p : region) {
    if (a[p] != b[p]) return false;
  }
  return true;
}

PointVec intersect(std::span<const Point> a, std::span<const Point> b) {
  PointVec out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool is_subset(std::span<const Point> a, std::span<const Point> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace txyz
