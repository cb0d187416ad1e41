#pragma once

// Exact rationals over 128-bit integers. No implicit reduction: values are
// kept over whatever denominator the caller chose, and comparisons go
// through 256-bit cross products so they are exact even near the 127-bit
// ceiling.

#include "mertens/arith.hpp"

namespace mertens {

struct Rat {
    i128 num = 0;
    i128 den = 1; // always > 0

    Rat() = default;
    Rat(i128 n, i128 d) : num(n), den(d) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }
    static Rat of(i128 n) { return Rat(n, 1); }

    int sign() const { return sgn(num); }
    i128 floor() const { return floor_div(num, den); }
    i128 ceil() const { return ceil_div(num, den); }

    // Arithmetic is plain cross multiplication; callers keep magnitudes in
    // range (used by oracles and small-scale paths, not the hot loops).
    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator-() const { return Rat(-num, den); }
};

// Sign of a - b, exact.
inline int cmp(const Rat& a, const Rat& b) { return cmp_prod(a.num, b.den, b.num, a.den); }

inline bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Rat& a, const Rat& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Rat& a, const Rat& b) { return cmp(a, b) != 0; }

inline int sgn(const Rat& r) { return r.sign(); }

} // namespace mertens
