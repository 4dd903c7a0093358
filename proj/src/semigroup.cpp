#include "txyz/semigroup.hpp"

#include <random>

#include "txyz/counting.hpp"
#include "txyz/structure.hpp"

namespace txyz {

namespace {

// Unbiased draw from [0, bound); mt19937_64 output is standard-specified,
// so results are reproducible across platforms.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t reject_from =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = gen();
  } while (v >= reject_from);
  return v % bound;
}

void check_dimension(const Universe& u, const Transformation& a) {
  if (a.n() != u.n()) {
    throw std::invalid_argument("dimension mismatch: transformation on " +
                                std::to_string(a.n()) + " points, universe on " +
                                std::to_string(u.n()));
  }
}

}  // namespace

bool is_member(const Universe& u, const Transformation& a) {
  check_dimension(u, a);
  for (Point y = 0; y < u.m(); ++y) {
    if (!u.in_z(a[y])) return false;
  }
  return true;
}

ElementStream::ElementStream(Universe u, Filter filter, std::optional<int> stratum)
    : u_(u), filter_(filter), stratum_(stratum),
      digits_(static_cast<std::size_t>(u.n()), 0) {
  if (stratum_ && (*stratum_ < 1 || *stratum_ > u_.k())) {
    throw std::invalid_argument("stratum r = " + std::to_string(*stratum_) +
                                " outside [1, k = " + std::to_string(u_.k()) + "]");
  }
}

bool ElementStream::advance() {
  for (int pos = u_.n() - 1; pos >= 0; --pos) {
    const Point base = pos < u_.m() ? u_.k() : u_.n();
    if (++digits_[static_cast<std::size_t>(pos)] < base) return true;
    digits_[static_cast<std::size_t>(pos)] = 0;
  }
  return false;
}

bool ElementStream::qualifies() const {
  if (stratum_) {
    // |Ya| = number of distinct values among the Y-portion.
    std::vector<bool> seen(static_cast<std::size_t>(u_.k()), false);
    int distinct = 0;
    for (int y = 0; y < u_.m(); ++y) {
      const auto v = static_cast<std::size_t>(digits_[static_cast<std::size_t>(y)]);
      if (!seen[v]) {
        seen[v] = true;
        ++distinct;
      }
    }
    if (distinct != *stratum_) return false;
  }
  if (filter_ == Filter::kAll) return true;
  Transformation t{digits_};
  return filter_ == Filter::kRegular ? is_regular_element(u_, t)
                                     : is_idempotent(u_, t);
}

std::optional<Transformation> ElementStream::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;  // first candidate is the all-zero image list
    } else if (!advance()) {
      done_ = true;
      break;
    }
    if (qualifies()) return Transformation(digits_);
  }
  return std::nullopt;
}

ElementStream enumerate(const Universe& u) { return ElementStream(u); }

ElementStream enumerate_stratum(const Universe& u, int r) {
  return ElementStream(u, Filter::kAll, r);
}

Transformation random_member(const Universe& u, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  PointVec images(static_cast<std::size_t>(u.n()));
  for (int x = 0; x < u.n(); ++x) {
    const std::uint64_t bound = x < u.m() ? u.k() : u.n();
    images[static_cast<std::size_t>(x)] =
        static_cast<Point>(uniform_below(gen, bound));
  }
  return Transformation(std::move(images));
}

std::vector<Transformation> materialize(const Universe& u, std::size_t limit) {
  if (order(u) > Count(static_cast<unsigned long>(limit))) {
    throw EnumerationLimitError("semigroup " + to_string(u) + " has " +
                                to_decimal(order(u)) + " elements, above the limit of " +
                                std::to_string(limit));
  }
  std::vector<Transformation> out;
  ElementStream stream(u);
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace txyz
