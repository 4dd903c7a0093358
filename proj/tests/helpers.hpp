#ifndef TXYZ_TESTS_HELPERS_HPP_
#define TXYZ_TESTS_HELPERS_HPP_

// Test-only oracles, deliberately independent of the library's enumeration
// and characterization code paths: plain odometers, definition-level
// filters, and the naive cancellation-condition loops.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "txyz/core.hpp"

namespace txyz::testing {

// Every self-map of [0,n), in lexicographic image-list order.
inline std::vector<Transformation> all_maps(int n) {
  std::vector<Transformation> out;
  PointVec digits(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(digits);
    int pos = n - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == n) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

// Members of T(X,Y,Z) by the raw definition: every Y-point lands in Z.
inline std::vector<Transformation> brute_members(const Universe& u) {
  std::vector<Transformation> out;
  for (const auto& t : all_maps(u.n())) {
    bool in = true;
    for (Point y = 0; y < u.m() && in; ++y) in = t[y] < u.k();
    if (in) out.push_back(t);
  }
  return out;
}

// Regularity by definition: some member b satisfies a b a = a.
inline bool brute_regular(const Transformation& a,
                          const std::vector<Transformation>& members) {
  for (const auto& b : members) {
    if (compose(compose(a, b), a) == a) return true;
  }
  return false;
}

inline std::vector<Universe> all_universes(int max_n) {
  std::vector<Universe> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= m; ++k) out.emplace_back(n, m, k);
    }
  }
  return out;
}

// Every partition of [0,n) via restricted growth strings.
inline std::vector<std::vector<PointVec>> all_set_partitions(int n) {
  std::vector<std::vector<PointVec>> out;
  PointVec rgs(static_cast<std::size_t>(n), 0);
  const auto emit = [&] {
    const int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<PointVec> partition(static_cast<std::size_t>(blocks));
    for (Point x = 0; x < n; ++x) {
      partition[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])]
          .push_back(x);
    }
    out.push_back(std::move(partition));
  };
  // rgs[0] = 0; rgs[i] <= 1 + max(rgs[0..i-1])
  while (true) {
    emit();
    int pos = n - 1;
    for (; pos >= 1; --pos) {
      Point cap = 0;
      for (int j = 0; j < pos; ++j) cap = std::max(cap, rgs[static_cast<std::size_t>(j)]);
      if (rgs[static_cast<std::size_t>(pos)] <= cap) break;
      rgs[static_cast<std::size_t>(pos)] = 0;
    }
    if (pos < 1) break;
    ++rgs[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
  }
  return out;
}

// Exact binomials by the Pascal recurrence, for cross-checking.
inline std::uint64_t pascal_binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) {
      next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] +
                                          row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

// The S^1 ground set: members plus the identity when it is not a member.
inline std::vector<Transformation> with_identity(const Universe& u,
                                                 std::vector<Transformation> members) {
  if (u.k() != u.m()) members.push_back(Transformation::identity(u.n()));
  return members;
}

// The defining cancellation conditions as literal quadruple loops.
inline bool naive_lstar(const std::vector<Transformation>& s1,
                        const Transformation& a, const Transformation& b) {
  for (const auto& x : s1) {
    for (const auto& y : s1) {
      if ((compose(a, x) == compose(a, y)) != (compose(b, x) == compose(b, y))) {
        return false;
      }
    }
  }
  return true;
}

inline bool naive_rstar(const std::vector<Transformation>& s1,
                        const Transformation& a, const Transformation& b) {
  for (const auto& x : s1) {
    for (const auto& y : s1) {
      if ((compose(x, a) == compose(y, a)) != (compose(x, b) == compose(y, b))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace txyz::testing

#endif  // TXYZ_TESTS_HELPERS_HPP_
