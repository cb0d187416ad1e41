#pragma once

// Diophantine approximation by continued fractions: given exact rational
// alpha and Q >= 1, find a0/q with q <= Q, gcd(a0, q) = 1 and
// |alpha - a0/q| <= 1/(qQ), together with the inverse of a0 mod q and the
// sign of alpha - a0/q.

#include "mertens/rational.hpp"

namespace mertens {

struct DiophApprox {
    i128 a0 = 0;
    i128 a0_inv = 0; // normalized to [0, q)
    i128 q = 1;
    int s = 0; // sgn(alpha - a0/q)
};

DiophApprox dioph_appr(Rat alpha, i128 Q);

} // namespace mertens
