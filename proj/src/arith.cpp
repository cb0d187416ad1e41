#include "mertens/arith.hpp"

#include <cmath>

namespace mertens {

uint64_t isqrt(u128 n) {
    if (n >= (u128(1) << 126)) throw std::range_error("isqrt: argument must be < 2^126");
    if (n == 0) return 0;
    u128 r = (u128)sqrtl((long double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return (uint64_t)r;
}

uint64_t icbrt(u128 n) {
    if (n == 0) return 0;
    u128 r = (u128)cbrtl((long double)n);
    while (r > 0 && r * r * r > n) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return (uint64_t)r;
}

uint64_t iroot4(u128 n) { return isqrt(isqrt(n)); }

i128 gcd_i128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + (int)(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128((u128)(-(v + 1)) + 1);
    return to_string_u128((u128)v);
}

u128 parse_u128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_u128: empty string");
    u128 v = 0;
    const u128 max = ~(u128)0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("parse_u128: not a decimal digit: " + s);
        int d = c - '0';
        if (v > (max - d) / 10) throw std::invalid_argument("parse_u128: overflow: " + s);
        v = v * 10 + d;
    }
    return v;
}

U256 mul_u128(u128 a, u128 b) {
    const u128 mask = (u128(1) << 64) - 1;
    u128 a0 = a & mask, a1 = a >> 64;
    u128 b0 = b & mask, b1 = b >> 64;
    u128 ll = a0 * b0;
    u128 lh = a0 * b1;
    u128 hl = a1 * b0;
    u128 hh = a1 * b1;
    u128 mid = (ll >> 64) + (lh & mask) + (hl & mask);
    U256 r;
    r.lo = (mid << 64) | (ll & mask);
    r.hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    return r;
}

static int cmp_u256(U256 a, U256 b) {
    if (a.hi != b.hi) return a.hi < b.hi ? -1 : 1;
    if (a.lo != b.lo) return a.lo < b.lo ? -1 : 1;
    return 0;
}

int cmp_prod(i128 a, i128 b, i128 c, i128 d) {
    int s1 = sgn(a) * sgn(b);
    int s2 = sgn(c) * sgn(d);
    if (s1 != s2) return s1 < s2 ? -1 : 1;
    if (s1 == 0) return 0;
    u128 ua = a < 0 ? (u128)(-a) : (u128)a;
    u128 ub = b < 0 ? (u128)(-b) : (u128)b;
    u128 uc = c < 0 ? (u128)(-c) : (u128)c;
    u128 ud = d < 0 ? (u128)(-d) : (u128)d;
    int m = cmp_u256(mul_u128(ua, ub), mul_u128(uc, ud));
    return s1 > 0 ? m : -m;
}

bool overflow_guard(u128 x, u128 v, u128 b_max) {
    if (x == 0 || v == 0) throw std::domain_error("overflow_guard: x, v must be >= 1");
    // 2 * b_max * v^4 < 2^127, evaluated without wraparound.
    const u128 lim = (u128(1) << 126); // compare b_max * v^4 < 2^126
    if (v >= (u128(1) << 31) + (u128(1) << 28)) {
        // v^4 alone can approach 2^126; go through 256-bit products.
        U256 v2 = mul_u128(v, v);
        if (v2.hi != 0) return false;
        U256 v4 = mul_u128(v2.lo, v2.lo);
        if (v4.hi != 0) return false;
        U256 g = mul_u128(b_max, v4.lo);
        return g.hi == 0 && g.lo < lim;
    }
    u128 v4 = v * v * v * v;
    U256 g = mul_u128(b_max, v4);
    return g.hi == 0 && g.lo < lim;
}

double overflow_guard_log2(u128 x, u128 v) {
    long double lx = (long double)x;
    long double lv = (long double)v;
    long double l = 1.0L + (16.0L / 3.0L) * log2l(lv) - log2l(6.0L * lx) / 3.0L;
    return (double)l;
}

} // namespace mertens
