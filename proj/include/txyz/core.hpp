#ifndef TXYZ_CORE_HPP_
#define TXYZ_CORE_HPP_

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Canonical universes, transformations, images, kernels, and the primitive
// algebra everything else builds on.
//
// Conventions used throughout the library:
//   * points are 0-based indices into X = {0, ..., n-1};
//   * the universe (n, m, k) encodes Z = [0,k) contained in Y = [0,m)
//     contained in X = [0,n);
//   * composition is written on the right: in compose(a, b), a acts first.

namespace txyz {

using Point = int;
using PointVec = std::vector<Point>;

/// Operation received a transformation that is not a member of T(X,Y,Z).
struct NotMemberError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// quasi_inverse received an element that is not regular.
struct NotRegularError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computation refused to materialize a semigroup above its element limit.
struct EnumerationLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Which of the four shapes (relative to Z = Y, Y = X) a universe has.
enum class CaseTag {
  kFull,             // k = m = n:     T(X)
  kRestrictedRange,  // k < m = n:     all images land in Z
  kInvariantSet,     // k = m < n:     Y is invariant
  kProper,           // k < m < n:     Z, Y, X all distinct
};

std::string_view to_string(CaseTag tag);

/// The canonical triple (n, m, k) with 1 <= k <= m <= n.
///
/// Any instance of nested nonempty finite sets Z in Y in X is isomorphic to
/// the canonical one via relabeling, so the library only deals in initial
/// segments: Z = [0,k), Y\Z = [k,m), X\Y = [m,n).
class Universe {
 public:
  Universe(int n, int m, int k);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int k() const noexcept { return k_; }

  CaseTag case_tag() const noexcept;

  bool in_z(Point p) const noexcept { return 0 <= p && p < k_; }
  bool in_y(Point p) const noexcept { return 0 <= p && p < m_; }
  bool in_x(Point p) const noexcept { return 0 <= p && p < n_; }

  // Region views, each sorted ascending.
  PointVec x_points() const;   // [0, n)
  PointVec y_points() const;   // [0, m)
  PointVec z_points() const;   // [0, k)
  PointVec y_minus_z() const;  // [k, m)
  PointVec x_minus_y() const;  // [m, n)

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  int n_;
  int m_;
  int k_;
};

std::string to_string(const Universe& u);  // "(n, m, k)"

/// A total map on {0, ..., n-1}, stored as its image list.
///
/// Value semantics: equality is entry-wise; ordering is lexicographic on the
/// image list, which is also the enumeration order used by ElementStream.
class Transformation {
 public:
  explicit Transformation(PointVec images);

  static Transformation identity(int n);

  /// Parses the text literal used by the CLI and fixtures: a comma-separated
  /// 0-based image list, e.g. "0,0,2" maps 0->0, 1->0, 2->2.
  static Transformation parse(std::string_view literal);

  int n() const noexcept { return static_cast<int>(images_.size()); }

  /// Applies the map: a[x] is the image of x.
  Point operator[](Point x) const { return images_[static_cast<std::size_t>(x)]; }

  const PointVec& images() const noexcept { return images_; }

  std::string str() const;  // the text literal

  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  PointVec images_;
};

/// An ordered subset of X: sorted, duplicate-free points.
class ImageSet {
 public:
  ImageSet(int n, PointVec members);  // canonicalizes

  int n() const noexcept { return n_; }
  const PointVec& points() const noexcept { return points_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(Point p) const;

  friend bool operator==(const ImageSet&, const ImageSet&) = default;

 private:
  int n_;
  PointVec points_;
};

/// The partition of X into preimage blocks, in canonical form: each block
/// sorted ascending, blocks ordered by their minimum element.
class KernelPartition {
 public:
  KernelPartition(int n, std::vector<PointVec> blocks);  // canonicalizes, validates

  int n() const noexcept { return n_; }
  const std::vector<PointVec>& blocks() const noexcept { return blocks_; }
  int size() const noexcept { return static_cast<int>(blocks_.size()); }

  friend bool operator==(const KernelPartition&, const KernelPartition&) = default;

 private:
  int n_;
  std::vector<PointVec> blocks_;
};

/// Composition with a applied first: x -> (x a) b.
Transformation compose(const Transformation& a, const Transformation& b);

/// The image of a region under a: { x a : x in region }.
ImageSet image_of(const Transformation& a, std::span<const Point> region);

/// The kernel partition pi_a = { x a^-1 : x in Xa }.
KernelPartition kernel_of(const Transformation& a);

/// True iff a and b take the same value on every point of region.
bool agree_on(const Transformation& a, const Transformation& b,
              std::span<const Point> region);

// Set algebra on sorted point sequences.
PointVec intersect(std::span<const Point> a, std::span<const Point> b);
bool is_subset(std::span<const Point> a, std::span<const Point> b);

}  // namespace txyz

#endif  // TXYZ_CORE_HPP_
