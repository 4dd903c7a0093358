#ifndef TXYZ_STRUCTURE_HPP_
#define TXYZ_STRUCTURE_HPP_

#include <optional>

#include "txyz/core.hpp"

// Regularity at element and semigroup level, quasi-inverse construction,
// idempotency, and idempotent construction for a prescribed kernel.

namespace txyz {

/// An element together with a quasi-inverse: element * quasi_inverse *
/// element = element, and both are members of the same semigroup.
struct RegularityWitness {
  Transformation element;
  Transformation quasi_inverse;
};

/// True iff a is regular in T(X,Y,Z): Xa n Y is contained in Za
/// (equivalently, the two sets are equal).
bool is_regular_element(const Universe& u, const Transformation& a);

/// A quasi-inverse b with a b a = a, built deterministically: each point of
/// Xa n Y maps to its smallest preimage in Z, each point of Xa \ Y to its
/// smallest preimage in X, everything else to the first such Z-preimage.
/// Throws NotRegularError when a is not regular.
Transformation quasi_inverse(const Universe& u, const Transformation& a);

RegularityWitness regularity_witness(const Universe& u, const Transformation& a);

/// True iff every element of T(X,Y,Z) is regular: |Y| = 1, or X = Y with
/// |Z| = 1, or Z = Y = X.
bool is_regular_semigroup(const Universe& u);

/// A member that is not regular, for universes where one exists: the
/// two-valued map sending the constrained region to 0 and the rest to the
/// smallest eligible second value.  Throws std::invalid_argument when the
/// semigroup is regular.
Transformation nonregular_witness(const Universe& u);

/// True iff a * a = a; decided by the internal characterization
/// (Xa avoids Y\Z and a fixes Xa pointwise).
bool is_idempotent(const Universe& u, const Transformation& a);

/// The idempotent with kernel p that maps each block to its canonical
/// representative (smallest point of block n Z when the block meets Y,
/// otherwise smallest point of the block), or nullopt when no idempotent
/// has kernel p (some block meets Y but not Z).
std::optional<Transformation> idempotent_with_kernel(const Universe& u,
                                                     const KernelPartition& p);

}  // namespace txyz

#endif  // TXYZ_STRUCTURE_HPP_
