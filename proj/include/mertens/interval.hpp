#pragma once

// Integer intervals with possibly infinite ends, stored closed on the
// integers, plus the exact quadratic-inequality solver that produces them.

#include "mertens/arith.hpp"

namespace mertens {

struct IntInterval {
    enum class Kind { empty, bounded, left_inf, right_inf, all };
    Kind kind = Kind::empty;
    i128 lo = 0; // valid for bounded, right_inf
    i128 hi = 0; // valid for bounded, left_inf

    static IntInterval empty() { return {}; }
    static IntInterval all() {
        IntInterval r;
        r.kind = Kind::all;
        return r;
    }
    static IntInterval bounded(i128 lo, i128 hi) {
        IntInterval r;
        if (lo > hi) return r;
        r.kind = Kind::bounded;
        r.lo = lo;
        r.hi = hi;
        return r;
    }
    // (-inf, hi]
    static IntInterval le(i128 hi) {
        IntInterval r;
        r.kind = Kind::left_inf;
        r.hi = hi;
        return r;
    }
    // [lo, +inf)
    static IntInterval ge(i128 lo) {
        IntInterval r;
        r.kind = Kind::right_inf;
        r.lo = lo;
        return r;
    }

    bool is_empty() const { return kind == Kind::empty; }
    bool has_lo() const { return kind == Kind::bounded || kind == Kind::right_inf; }
    bool has_hi() const { return kind == Kind::bounded || kind == Kind::left_inf; }

    bool contains(i128 n) const {
        switch (kind) {
            case Kind::empty: return false;
            case Kind::all: return true;
            case Kind::bounded: return lo <= n && n <= hi;
            case Kind::left_inf: return n <= hi;
            case Kind::right_inf: return n >= lo;
        }
        return false;
    }

    IntInterval shifted(i128 t) const {
        IntInterval r = *this;
        if (r.has_lo()) r.lo += t;
        if (r.has_hi()) r.hi += t;
        return r;
    }
};

inline IntInterval intersect(const IntInterval& a, const IntInterval& b) {
    if (a.is_empty() || b.is_empty()) return IntInterval::empty();
    bool has_lo = a.has_lo() || b.has_lo();
    bool has_hi = a.has_hi() || b.has_hi();
    i128 lo = 0, hi = 0;
    if (has_lo) {
        bool set = false;
        if (a.has_lo()) { lo = a.lo; set = true; }
        if (b.has_lo()) lo = set && lo > b.lo ? lo : b.lo;
    }
    if (has_hi) {
        bool set = false;
        if (a.has_hi()) { hi = a.hi; set = true; }
        if (b.has_hi()) hi = set && hi < b.hi ? hi : b.hi;
    }
    if (!has_lo && !has_hi) return IntInterval::all();
    if (has_lo && has_hi) return IntInterval::bounded(lo, hi);
    return has_lo ? IntInterval::ge(lo) : IntInterval::le(hi);
}

// Integer complement of a ray (or of the empty/full line). Bounded
// intervals have no single-interval complement; callers never need one.
inline IntInterval complement(const IntInterval& a) {
    switch (a.kind) {
        case IntInterval::Kind::empty: return IntInterval::all();
        case IntInterval::Kind::all: return IntInterval::empty();
        case IntInterval::Kind::left_inf: return IntInterval::ge(a.hi + 1);
        case IntInterval::Kind::right_inf: return IntInterval::le(a.lo - 1);
        default: throw std::domain_error("complement: bounded interval");
    }
}

// Integer solutions of a quadratic inequality:
//   a < 0: returns I with I cap Z = { x : ax^2 + bx + c >= 0 }
//   a > 0: returns I with I cap Z = { x : ax^2 + bx + c <  0 }
// All arithmetic exact; the discriminant must fit in 128 bits (callers in
// the correction pass are covered by overflow_guard).
IntInterval quad_ineq_z(i128 a, i128 b, i128 c);

} // namespace mertens
