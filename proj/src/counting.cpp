#include "txyz/counting.hpp"

#include <algorithm>
#include <vector>

namespace txyz {

namespace {

Count ui_power(unsigned long base, unsigned long exp) {
  Count out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace

std::string to_decimal(const Count& c) { return c.get_str(); }

Count binomial(unsigned long n, long r) {
  if (r < 0 || static_cast<unsigned long>(r) > n) return 0;
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(r));
  return out;
}

Count factorial(unsigned long n) {
  Count out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Count power(const Count& base, unsigned long exp) {
  Count out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Count stirling2(unsigned long n, unsigned long r) {
  if (r > n) return 0;
  // Triangle of rows S(p, 0..p); confined per thread, grown on demand.
  thread_local std::vector<std::vector<Count>> rows{{Count(1)}};
  while (rows.size() <= n) {
    const std::size_t p = rows.size();
    std::vector<Count> row(p + 1);
    row[0] = 0;
    for (std::size_t q = 1; q < p; ++q) {
      row[q] = Count(static_cast<unsigned long>(q)) * rows[p - 1][q] +
               rows[p - 1][q - 1];
    }
    row[p] = 1;
    rows.push_back(std::move(row));
  }
  return rows[n][r];
}

Count stirling2_by_formula(unsigned long n, unsigned long r) {
  if (r > n) return 0;
  Count sum = 0;
  for (unsigned long i = 0; i <= r; ++i) {
    const Count term = binomial(r, static_cast<long>(i)) * ui_power(r - i, n);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Count out;
  mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), factorial(r).get_mpz_t());
  return out;
}

Count order(const Universe& u) {
  const auto n = static_cast<unsigned long>(u.n());
  const auto m = static_cast<unsigned long>(u.m());
  const auto k = static_cast<unsigned long>(u.k());
  const Count closed = ui_power(k, m) * ui_power(n, n - m);
  Count stratified = 0;
  for (unsigned long r = 1; r <= k; ++r) {
    stratified += binomial(k, static_cast<long>(r)) * factorial(r) *
                  stirling2(m, r) * ui_power(n, n - m);
  }
  if (closed != stratified) {
    throw std::logic_error("order forms disagree for " + to_string(u));
  }
  return closed;
}

Count order_stratum(const Universe& u, int r) {
  if (r < 1 || r > u.k()) {
    throw std::invalid_argument("stratum r = " + std::to_string(r) +
                                " outside [1, k = " + std::to_string(u.k()) + "]");
  }
  const auto n = static_cast<unsigned long>(u.n());
  const auto m = static_cast<unsigned long>(u.m());
  const auto k = static_cast<unsigned long>(u.k());
  return binomial(k, r) * factorial(static_cast<unsigned long>(r)) *
         stirling2(m, static_cast<unsigned long>(r)) * ui_power(n, n - m);
}

Count regular_count(const Universe& u) {
  const auto n = static_cast<unsigned long>(u.n());
  const auto m = static_cast<unsigned long>(u.m());
  const auto k = static_cast<unsigned long>(u.k());
  Count total = 0;
  for (unsigned long r = 1; r <= k; ++r) {
    total += binomial(k, static_cast<long>(r)) * factorial(r) * stirling2(k, r) *
             ui_power(r, m - k) * ui_power(n - m + r, n - m);
  }
  return total;
}

Count idempotent_count(const Universe& u) {
  const long n = u.n();
  const long m = u.m();
  const long k = u.k();
  Count total = 0;
  for (long r = 1; r <= n - m + k; ++r) {
    const long i_lo = std::max(1L, m - n + r);
    const long i_hi = std::min(k, r);
    for (long i = i_lo; i <= i_hi; ++i) {
      total += binomial(static_cast<unsigned long>(k), i) *
               binomial(static_cast<unsigned long>(n - m), r - i) *
               ui_power(static_cast<unsigned long>(i),
                        static_cast<unsigned long>(m - i)) *
               ui_power(static_cast<unsigned long>(r),
                        static_cast<unsigned long>(n - m - r + i));
    }
  }
  return total;
}

}  // namespace txyz
