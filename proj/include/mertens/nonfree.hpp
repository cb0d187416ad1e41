#pragma once

// The pass over pairs (m1, m2) with max(m1, m2) > v: a descending loop over
// n that streams prefix sums S(m) = sum_{r <= m} D(r; x/r) through sliding
// windows. Also the brute-force Mertens sum, which both seeds the driver
// (M(sqrt x)) and serves as the oracle everywhere.
//
// The OpenMP variants are the defaults; the _serial twins are the reference
// implementations the tests compare against (results are identical bit for
// bit, the sums being exact integers).

#include "mertens/arith.hpp"

#include <cstdint>
#include <vector>

namespace mertens {

// M(x) = sum_{n <= x} mu(n) by segmented sieve, window length floor(sqrt x).
int64_t brute_m(uint64_t x);
int64_t brute_m_serial(uint64_t x);

// S[j] = S0 + sum_{r0 <= r <= r0+j} D(r; x/r) for 0 <= j <= delta, where
// the caller guarantees S0 = sum_{r < r0} D(r; x/r). Resuming with the
// previous window's last entry continues the global prefix sum.
std::vector<int64_t> sarr(uint64_t x, uint64_t r0, uint64_t delta, int64_t S0);
std::vector<int64_t> sarr_serial(uint64_t x, uint64_t r0, uint64_t delta, int64_t S0);

// sum over n <= x of sum_{m1 m2 n1 = n, m1,m2 <= u, max(m1,m2) > v}
// mu(m1) mu(m2), for 1 <= v <= u = floor(sqrt x). delta_override = 0 picks
// the default window length ceil(sqrt(max(u, x/v))).
i128 large_nonfree(uint64_t x, uint64_t v, uint64_t u, uint64_t delta_override = 0);

} // namespace mertens
