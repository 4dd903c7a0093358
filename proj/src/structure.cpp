#include "txyz/structure.hpp"

#include "txyz/semigroup.hpp"

namespace txyz {

namespace {

void require_member(const Universe& u, const Transformation& a) {
  if (!is_member(u, a)) {
    throw NotMemberError("transformation " + a.str() + " is not a member of T" +
                         to_string(u));
  }
}

}  // namespace

bool is_regular_element(const Universe& u, const Transformation& a) {
  require_member(u, a);
  const ImageSet za = image_of(a, u.z_points());
  for (Point x = 0; x < u.n(); ++x) {
    const Point v = a[x];
    if (u.in_y(v) && !za.contains(v)) return false;  // v in Xa n Y but not in Za
  }
  return true;
}

Transformation quasi_inverse(const Universe& u, const Transformation& a) {
  if (!is_regular_element(u, a)) {
    throw NotRegularError("transformation " + a.str() +
                          " is not regular in T" + to_string(u));
  }
  const ImageSet xa = image_of(a, u.x_points());

  // Xa n Y is nonempty (it contains Ya); pick the smallest Z-preimage of
  // each of its points.  Regularity guarantees one exists.
  std::vector<std::pair<Point, Point>> z_preimage;  // (point of Xa n Y, z)
  for (Point v : xa.points()) {
    if (!u.in_y(v)) continue;
    for (Point z = 0; z < u.k(); ++z) {
      if (a[z] == v) {
        z_preimage.emplace_back(v, z);
        break;
      }
    }
  }
  const Point default_z = z_preimage.front().second;

  PointVec images(static_cast<std::size_t>(u.n()), default_z);
  for (auto [v, z] : z_preimage) images[static_cast<std::size_t>(v)] = z;
  for (Point v : xa.points()) {
    if (u.in_y(v)) continue;
    // v in Xa \ Y keeps its smallest preimage.
    for (Point x = 0; x < u.n(); ++x) {
      if (a[x] == v) {
        images[static_cast<std::size_t>(v)] = x;
        break;
      }
    }
  }

  Transformation beta(std::move(images));
  if (!is_member(u, beta) || compose(compose(a, beta), a) != a) {
    throw std::logic_error("quasi-inverse postcondition failed for " + a.str());
  }
  return beta;
}

RegularityWitness regularity_witness(const Universe& u, const Transformation& a) {
  return RegularityWitness{a, quasi_inverse(u, a)};
}

bool is_regular_semigroup(const Universe& u) {
  return u.m() == 1 || (u.n() == u.m() && u.k() == 1) ||
         (u.n() == u.m() && u.m() == u.k());
}

Transformation nonregular_witness(const Universe& u) {
  if (is_regular_semigroup(u)) {
    throw std::invalid_argument("T" + to_string(u) +
                                " is regular; no non-regular witness exists");
  }
  const Point z = 0;
  PointVec images(static_cast<std::size_t>(u.n()), z);
  if (u.m() < u.n()) {
    // Y maps to z, X\Y to the smallest y in Y\Z (or in Y\{z} when Z = Y).
    const Point y = u.k() < u.m() ? u.k() : 1;
    for (Point x = u.m(); x < u.n(); ++x) images[static_cast<std::size_t>(x)] = y;
  } else {
    // m = n with k >= 2: Z maps to z, X\Z to the next point of Z.
    for (Point x = u.k(); x < u.n(); ++x) images[static_cast<std::size_t>(x)] = 1;
  }
  return Transformation(std::move(images));
}

bool is_idempotent(const Universe& u, const Transformation& a) {
  require_member(u, a);
  for (Point x = 0; x < u.n(); ++x) {
    const Point v = a[x];
    if (u.in_y(v) && !u.in_z(v)) return false;  // image meets Y\Z
    if (a[v] != v) return false;                // image point not fixed
  }
  return true;
}

std::optional<Transformation> idempotent_with_kernel(const Universe& u,
                                                     const KernelPartition& p) {
  if (p.n() != u.n()) {
    throw std::invalid_argument("partition of " + std::to_string(p.n()) +
                                " points does not match universe " + to_string(u));
  }
  PointVec images(static_cast<std::size_t>(u.n()));
  for (const PointVec& block : p.blocks()) {
    // Blocks are sorted, so block.front() is min(block), and it lies in Z
    // exactly when the block meets Z at all.
    const Point rep = block.front();
    if (u.in_y(rep) && !u.in_z(rep)) return std::nullopt;  // meets Y but not Z
    for (Point x : block) images[static_cast<std::size_t>(x)] = rep;
  }
  return Transformation(std::move(images));
}

}  // namespace txyz
