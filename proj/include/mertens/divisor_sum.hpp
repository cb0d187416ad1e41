#pragma once

// D(n; a) = sum of mu(d) over divisors d <= a of n, computed from the
// factorization by a recursion that consumes the largest prime first and
// stops early once every remaining divisor is in (or out of) range. The
// average node count over a window is O(log log n), which is what makes
// the streaming prefix-sum pass cheap.

#include "mertens/arith.hpp"
#include "mertens/sieve.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace mertens {

// Integer threshold form. factors must be the complete factorization of
// some n >= 1 with primes strictly increasing and exponents >= 1; throws
// std::invalid_argument otherwise. node_count, when given, accumulates the
// number of recursion calls.
int64_t facto_sum_mu(const std::vector<std::pair<uint64_t, uint32_t>>& factors, i128 a,
                     uint64_t* node_count = nullptr);

// Threshold a = x/r compared exactly in integers (d <= x/r iff d*r <= x).
// primes holds the distinct prime factors of the integer whose divisors
// are being ranged over.
int64_t facto_sum_mu_ratio(PackedFactors primes, uint64_t x_num, uint64_t r_den,
                           uint64_t* node_count = nullptr);

} // namespace mertens
