#include "mertens/dioph.hpp"

namespace mertens {

// Continued-fraction expansion run on the exact pair (num, den); each step
// is one Euclidean division, so the loop is O(log max(Q, den)).
DiophApprox dioph_appr(Rat alpha, i128 Q) {
    if (Q < 1) throw std::domain_error("dioph_appr: Q must be >= 1");
    i128 num = alpha.num, den = alpha.den;
    i128 b = floor_div(num, den);
    i128 p = b, q = 1, pm = 1, qm = 0;
    int s = 1;
    while (q <= Q) {
        if (num == b * den) {
            // alpha hit exactly; the current convergent is alpha itself.
            DiophApprox r;
            r.a0 = p;
            r.q = q;
            r.a0_inv = mod_nonneg(-s * qm, q);
            r.s = 0;
            return r;
        }
        // alpha <- 1/(alpha - b)
        i128 nden = num - b * den;
        num = den;
        den = nden;
        b = num / den; // both positive now
        i128 pp = b * p + pm, qp = b * q + qm;
        pm = p;
        qm = q;
        p = pp;
        q = qp;
        s = -s;
    }
    DiophApprox r;
    r.a0 = pm;
    r.q = qm;
    r.a0_inv = mod_nonneg(i128(s) * q, qm);
    r.s = -s;
    return r;
}

} // namespace mertens
