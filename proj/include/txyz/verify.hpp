#ifndef TXYZ_VERIFY_HPP_
#define TXYZ_VERIFY_HPP_

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "txyz/core.hpp"

// The cross-validation harness: pits every characterization and counting
// formula against brute force over ranges of universes and produces a
// machine-readable report.

namespace txyz {

struct VerificationCell {
  Universe universe;
  std::string check;
  std::string expected;
  std::string actual;
  bool pass;
};

/// One suite run.  Cells are ordered lexicographically by (n, m, k), then by
/// check name, so reports are byte-identical across runs; elapsed is kept on
/// the struct but excluded from both serializations for the same reason.
struct VerificationReport {
  std::string suite;
  std::vector<VerificationCell> cells;
  std::chrono::milliseconds elapsed{0};
  bool overall = false;

  std::string to_json() const;  // schema: {suite, cells[], overall}
  std::string to_text() const;  // plain-text table
};

/// Test-only overrides for the characterization predicates under test.
/// Leaving a member empty uses the real implementation.  Injecting a mutated
/// predicate must flip at least one cell: that is how the harness proves it
/// can fail.
struct VerifyHooks {
  std::function<bool(const Universe&, const Transformation&)> is_regular_element;
  std::function<bool(const Universe&, const Transformation&)> is_idempotent;
  std::function<bool(const Universe&, const Transformation&, const Transformation&)>
      lstar_related;
  std::function<bool(const Universe&, const Transformation&, const Transformation&)>
      rstar_related;
};

/// Compares order, every order_stratum, regular_count and idempotent_count
/// against exhaustive filtered enumeration for every 1 <= k <= m <= n <= max_n.
VerificationReport verify_counts(int max_n, int bound = 5,
                                 const VerifyHooks* hooks = nullptr);

/// Compares lstar_related/rstar_related against the exact oracles on every
/// ordered pair of members of every universe with n <= max_n.
VerificationReport verify_relations(int max_n, int bound = 4,
                                    const VerifyHooks* hooks = nullptr);

/// Per element: regularity predicate vs existence of b with aba = a, and the
/// quasi-inverse postconditions; per universe: classification vs
/// all-elements-regular.
VerificationReport verify_regularity(int max_n, int bound = 4,
                                     const VerifyHooks* hooks = nullptr);

/// Verdict table vs empirical class-by-class idempotent checking.
VerificationReport verify_abundance(int max_n, int bound = 4,
                                    const VerifyHooks* hooks = nullptr);

}  // namespace txyz

#endif  // TXYZ_VERIFY_HPP_
