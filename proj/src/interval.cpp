#include "mertens/interval.hpp"

namespace mertens {

IntInterval quad_ineq_z(i128 a, i128 b, i128 c) {
    if (a == 0) throw std::domain_error("quad_ineq_z: a must be nonzero");
    i128 disc = b * b - 4 * a * c;
    if (disc < 0) return IntInterval::empty();
    i128 q = (i128)isqrt((u128)disc);
    bool exact = q * q == disc;
    // Candidate endpoints (-b -+ q) / 2a; order them before rounding, since
    // dividing by a negative 2a swaps the roots.
    i128 n_lo = -b - q, n_hi = -b + q;
    if (a < 0) std::swap(n_lo, n_hi);
    i128 i0, i1;
    if (a < 0 || !exact) {
        // Closed interval on the real roots (strict set drops no integer
        // for irrational roots).
        i0 = ceil_div(n_lo, 2 * a);
        i1 = floor_div(n_hi, 2 * a);
    } else {
        // a > 0 with rational roots: the roots themselves are excluded.
        i0 = floor_div(n_lo, 2 * a) + 1;
        i1 = ceil_div(n_hi, 2 * a) - 1;
    }
    if (i0 <= i1) return IntInterval::bounded(i0, i1);
    return IntInterval::empty();
}

} // namespace mertens
