#ifndef TXYZ_SEMIGROUP_HPP_
#define TXYZ_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "txyz/core.hpp"

// Membership, enumeration, and stratified enumeration of T(X,Y,Z).

namespace txyz {

/// Default ceiling on how many elements any operation will materialize.
inline constexpr std::size_t kDefaultMaterializeLimit = 100000;

/// True iff a lies in T(X,Y,Z), i.e. Ya is contained in Z.
bool is_member(const Universe& u, const Transformation& a);

enum class Filter { kAll, kRegular, kIdempotent };

/// Lazy, single-consumer stream over the members of T(X,Y,Z) in
/// lexicographic order of image lists.  The Y-portion of the image list runs
/// as a base-k counter, the X\Y-portion base-n.  An optional filter keeps
/// only regular or idempotent members; an optional stratum r keeps only
/// members with |Ya| = r.
class ElementStream {
 public:
  explicit ElementStream(Universe u, Filter filter = Filter::kAll,
                         std::optional<int> stratum = std::nullopt);

  const Universe& universe() const noexcept { return u_; }

  /// The next qualifying member, or nullopt once exhausted.
  std::optional<Transformation> next();

 private:
  bool advance();
  bool qualifies() const;

  Universe u_;
  Filter filter_;
  std::optional<int> stratum_;
  PointVec digits_;
  bool started_ = false;
  bool done_ = false;
};

ElementStream enumerate(const Universe& u);
ElementStream enumerate_stratum(const Universe& u, int r);

/// A uniformly distributed member: each Y-point image is drawn uniformly
/// from Z, each X\Y-point image uniformly from X.  Deterministic in seed
/// (the generator and the rejection sampling are both fully specified).
Transformation random_member(const Universe& u, std::uint64_t seed);

/// The whole semigroup in enumeration order.  Throws EnumerationLimitError
/// when the order exceeds limit (checked before any element is built).
std::vector<Transformation> materialize(
    const Universe& u, std::size_t limit = kDefaultMaterializeLimit);

}  // namespace txyz

#endif  // TXYZ_SEMIGROUP_HPP_
