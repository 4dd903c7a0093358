#ifndef TXYZ_COUNTING_HPP_
#define TXYZ_COUNTING_HPP_

#include <gmpxx.h>

#include <string>

#include "txyz/core.hpp"

// Exact combinatorics: binomials, Stirling numbers of the second kind, and
// the cardinality formulas for T(X,Y,Z), its regular elements, and its
// idempotents.  Everything is arbitrary precision; n^n leaves 64 bits at
// n = 16 and the formulas are meant to be usable far beyond enumeration
// range.

namespace txyz {

/// Exact nonnegative integer count.
using Count = mpz_class;

/// Decimal rendering; counts never pass through floating point.
std::string to_decimal(const Count& c);

/// n choose r, with value 0 whenever r < 0 or r > n.
Count binomial(unsigned long n, long r);

Count factorial(unsigned long n);

/// base^exp (with 0^0 = 1).
Count power(const Count& base, unsigned long exp);

/// Stirling number of the second kind, by the recurrence
/// S(n,r) = r S(n-1,r) + S(n-1,r-1) with S(0,0) = 1 and S(p,0) = 0 for
/// p >= 1.  Rows are memoized per thread.
Count stirling2(unsigned long n, unsigned long r);

/// The same number by the alternating sum (1/r!) sum_i (-1)^i C(r,i)(r-i)^n;
/// kept as an independent cross-check of the recurrence.
Count stirling2_by_formula(unsigned long n, unsigned long r);

/// |T(X,Y,Z)| = k^m n^(n-m).  The stratified sum
/// sum_r C(k,r) r! S(m,r) n^(n-m) is evaluated alongside and asserted equal.
Count order(const Universe& u);

/// |{a in T(X,Y,Z) : |Ya| = r}| = C(k,r) r! S(m,r) n^(n-m), for 1 <= r <= k.
Count order_stratum(const Universe& u, int r);

/// Number of regular elements:
/// sum_{r=1}^{k} C(k,r) r! S(k,r) r^(m-k) (n-m+r)^(n-m).
Count regular_count(const Universe& u);

/// Number of idempotents:
/// sum_{r=1}^{n-m+k} sum_{i=max(1,m-n+r)}^{min(k,r)}
///     C(k,i) C(n-m,r-i) i^(m-i) r^(n-m-r+i).
/// An empty inner range contributes 0.
Count idempotent_count(const Universe& u);

}  // namespace txyz

#endif  // TXYZ_COUNTING_HPP_
