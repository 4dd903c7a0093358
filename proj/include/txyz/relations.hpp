#ifndef TXYZ_RELATIONS_HPP_
#define TXYZ_RELATIONS_HPP_

#include <optional>
#include <vector>

#include "txyz/core.hpp"
#include "txyz/semigroup.hpp"

// The Lambda relation, the starred Green's relations L* and R* (both by
// internal characterization and by exact oracle over the finite semigroup),
// class partitioning, and abundance verdicts.
//
// Characterizations are only known for the proper case k < m < n and for the
// full case T(X); for the two boundary cases (k = m < n and k < m = n) the
// public predicates fall back to the oracle rather than guess.

namespace txyz {

enum class RelationKind { kLambda, kLstar, kRstar };
enum class ClassMethod { kCharacterization, kOracle };

std::string_view to_string(RelationKind kind);
std::string_view to_string(ClassMethod method);

/// The auxiliary equivalence Lambda on the proper case: a and b are related
/// iff the emptiness statuses of (X\Y)a n (Y\Z) and (X\Y)b n (Y\Z) agree.
/// Throws std::invalid_argument outside the proper case.
bool lambda_related(const Universe& u, const Transformation& a,
                    const Transformation& b);

/// L*-relatedness.  Proper case with k = 1: Lambda-related and the images
/// agree on X\Y.  Proper case with k >= 2, and the full case: Xa = Xb.
/// Boundary cases: decided by lstar_oracle.
bool lstar_related(const Universe& u, const Transformation& a,
                   const Transformation& b);

/// R*-relatedness.  Proper and full cases: kernel equality.  Boundary
/// cases: decided by rstar_oracle.
bool rstar_related(const Universe& u, const Transformation& a,
                   const Transformation& b);

/// Exact L* test from the defining cancellation condition: for all x, y in
/// S^1, ax = ay iff bx = by.  Since ax = ay exactly when x and y agree on
/// Xa, this compares the partitions of S^1 induced by restriction to the
/// two images instead of running the quadruple loop.  Enumerates the whole
/// semigroup (identity adjoined when k < m).
bool lstar_oracle(const Universe& u, const Transformation& a,
                  const Transformation& b,
                  std::size_t limit = kDefaultMaterializeLimit);

/// Exact R* test, dually: compares the partitions of S^1 induced by
/// x -> compose(x, a) and x -> compose(x, b).
bool rstar_oracle(const Universe& u, const Transformation& a,
                  const Transformation& b,
                  std::size_t limit = kDefaultMaterializeLimit);

// Oracle class labels for every member (given in enumeration order): two
// members get equal labels iff the oracle relates them.  Batch form used by
// relation_classes and the verification harness.
std::vector<int> lstar_oracle_labels(const Universe& u,
                                     const std::vector<Transformation>& members);
std::vector<int> rstar_oracle_labels(const Universe& u,
                                     const std::vector<Transformation>& members);

/// A partition of the enumerated semigroup under one relation.  Classes are
/// ordered by their smallest member; members within a class stay in
/// enumeration order.
struct RelationClasses {
  Universe universe;
  RelationKind kind;
  ClassMethod method;
  std::vector<std::vector<Transformation>> classes;
};

/// Partitions enumerate(u) under the chosen relation.  method selects the
/// characterization dispatch or the oracle; Lambda has no oracle form and
/// always uses its definition.  Throws EnumerationLimitError above limit.
RelationClasses relation_classes(const Universe& u, RelationKind kind,
                                 ClassMethod method = ClassMethod::kCharacterization,
                                 std::size_t limit = kDefaultMaterializeLimit);

/// Left/right abundance verdict.  When a side is false the verdict can carry
/// a witness class of that side's relation containing no idempotent.
struct AbundanceVerdict {
  bool left;
  bool right;
  std::optional<RelationKind> witness_kind;
  std::optional<std::vector<Transformation>> witness_class;
};

/// With empirical = false, the closed-form verdict table:
///   full                    -> (true,  true)
///   restricted range, k = 1 -> (true,  true)
///   restricted range, k >= 2-> (true,  false)
///   invariant set           -> (true,  true)
///   proper, k = 1           -> (false, true)
///   proper, k >= 2          -> (false, false)
/// With empirical = true, computes the L*- and R*-classes and checks each
/// for an idempotent, attaching a witness class when a side fails.
AbundanceVerdict abundance(const Universe& u, bool empirical = false,
                           std::size_t limit = kDefaultMaterializeLimit);

}  // namespace txyz

#endif  // TXYZ_RELATIONS_HPP_
