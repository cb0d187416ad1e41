#pragma once

// Exact integer primitives used throughout: 128-bit helpers, floor/ceil
// division, nonnegative remainders, integer roots, and the 127-bit
// overflow guard for the linear-approximation pass.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mertens {

using i128 = __int128;
using u128 = unsigned __int128;

inline int sgn(i128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Floor division, any nonzero divisor.
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

// Representative of a mod q in [0, q). Matches the convention {x} in [0,1)
// for negative x as well.
inline i128 mod_nonneg(i128 a, i128 q) {
    if (q <= 0) throw std::domain_error("mod_nonneg: modulus must be positive");
    i128 r = a % q;
    return r < 0 ? r + q : r;
}

// Largest integer <= n congruent to a mod q.
inline i128 flcong(i128 n, i128 a, i128 q) { return n - mod_nonneg(n - a, q); }

// Exact floor square root; n < 2^126. Hardware sqrt seeds the value, the
// correction loops make the result independent of rounding mode.
uint64_t isqrt(u128 n);

// Exact floor cube / fourth roots (same seeding scheme).
uint64_t icbrt(u128 n);
uint64_t iroot4(u128 n);

i128 gcd_i128(i128 a, i128 b);

std::string to_string_i128(i128 v);
std::string to_string_u128(u128 v);
// Parses a decimal string; throws std::invalid_argument on junk or overflow.
u128 parse_u128(const std::string& s);

// 256-bit product of two unsigned 128-bit values, via 64-bit limbs.
struct U256 {
    u128 hi, lo;
};
U256 mul_u128(u128 a, u128 b);

// Sign of a*b - c*d, computed exactly in 256 bits.
int cmp_prod(i128 a, i128 b, i128 c, i128 d);

// True iff the worst-case magnitude q*m0^2*n0^2 <= 2*b_max*v^4 of the
// correction pass stays below 2^127. Rounds pessimistically: never accepts
// a configuration that could overflow.
bool overflow_guard(u128 x, u128 v, u128 b_max);

// log2 of the bound 2*v^(16/3)/(6x)^(1/3); reporting only.
double overflow_guard_log2(u128 x, u128 v);

} // namespace mertens
