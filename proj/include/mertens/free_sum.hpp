#pragma once

// The pass over pairs m, n <= v: the window [1,v]^2 is tiled into
// neighborhoods [m0-a, m0+a) x [n0-b, n0+b) on which x/mn is replaced by
// its linear model; the floor-of-linear sum separates, and the difference
// against the true floor is nonzero only on two residue classes mod q,
// where q comes from a Diophantine approximation of the n-slope. Those
// corrections reduce to table lookups plus one or two integer quadratic
// solves per m.
//
// Weight arrays are indexed by offset: f[i] is the weight at m0 - a + i,
// g[j] the weight at n0 - b + j. Rectangle sums are over half-open ranges
// [m0, m1) x [n0, n1).

#include "mertens/arith.hpp"
#include "mertens/dioph.hpp"
#include "mertens/interval.hpp"
#include "mertens/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mertens {

// sum f(m) g(n) (floor(alpha0 + alpha1 m) + floor(alpha2 n)) over
// [-a, a) x [-b, b), computed in separated form.
i128 linear_sum(std::span<const int8_t> f, std::span<const int8_t> g, int64_t a, int64_t b,
                const Rat& alpha0, const Rat& alpha1, const Rat& alpha2);

// Prefix sums of g by congruence class: F[n] (stored at index n + b) sums
// g over n' <= n in the class of n mod q; rho_r sums the class
// a0 n == r (mod q); sigma_r = sum of rho_j for j > q - r.
struct CongruenceTables {
    int64_t b = 0;
    int64_t q = 1;
    std::vector<int64_t> F;     // size 2b, index n + b
    std::vector<int64_t> rho;   // size q
    std::vector<int64_t> sigma; // size q + 1
};

CongruenceTables sum_table(std::span<const int8_t> g, int64_t b, i128 a0, int64_t q);

// sum of g over nonzero multiples of q on the side where delta * n < 0:
// positive multiples for s_delta < 0, negative for s_delta > 0, 0 if
// s_delta = 0.
int64_t ray_sum(std::span<const int8_t> g, int64_t q, int64_t b, int s_delta);

// sum of g(n) over n in I, n == r (mod q), n in [-b, b), via two
// congruence probes into the prefix table.
int64_t sum_inter(const CongruenceTables& T, i128 r, const IntInterval& I);

// Corrections for one m (absolute coordinate m_abs = m0 + offset), each
// summing g(n) * weight over one residue class of n-offsets:
//   special1  : class a0 n == -1-r0, weight L2 - L1 (q > 1)
//   special0a : class a0 n == -r0,   weight L1 - L0
//   special0b : class a0 n == -r0,   weight L2 - L1 (q > 1)
//   special00 : q = 1 (single class), weight L2 - L1
// floor_R0 is floor(alpha0 + alpha1 m); Q_ratio = beta/delta (any value
// when s_delta = 0).
int64_t special1(const CongruenceTables& T, u128 x, int64_t q, i128 a0, i128 a0_inv, i128 floor_R0,
                 int64_t r0, uint64_t n_center, uint64_t m_abs, int64_t b);
int64_t special0a(const CongruenceTables& T, int64_t q, i128 a0, i128 a0_inv, int64_t r0, int64_t b,
                  const Rat& Q_ratio, int s_beta, int s_delta);
int64_t special0b(const CongruenceTables& T, u128 x, int64_t q, i128 a0, i128 a0_inv, i128 floor_R0,
                  int64_t r0, uint64_t n_center, uint64_t m_abs, int64_t b, const Rat& Q_ratio,
                  int s_beta, int s_delta);
int64_t special00(const CongruenceTables& T, u128 x, i128 a0, i128 floor_R0, int64_t r0,
                  uint64_t n_center, uint64_t m_abs, int64_t b, const Rat& Q_ratio, int s_beta,
                  int s_delta);

// sum f(m) g(n) floor(x / ((m0+m)(n0+n))) over [-a, a) x [-b, b), exact.
// Caller guarantees the linear-model error is in (0, 1/(2b)] on the window
// (the schedule's a, b choices do) and m0 - a >= 1, n0 - b >= 1.
i128 sum_by_lin(std::span<const int8_t> f, std::span<const int8_t> g, uint64_t x, uint64_t m_center,
                uint64_t n_center, int64_t a, int64_t b);

// Reference double loop; f indexed by m - m0, g by n - n0.
template <class F>
i128 brute_double_sum(uint64_t m0, uint64_t m1, uint64_t n0, uint64_t n1, std::span<const int8_t> f,
                      std::span<const int8_t> g, F&& weight) {
    i128 s = 0;
    for (uint64_t m = m0; m < m1; ++m) {
        if (f[m - m0] == 0) continue;
        for (uint64_t n = n0; n < n1; ++n) {
            if (g[n - n0] == 0) continue;
            s += (i128)f[m - m0] * g[n - n0] * weight(m, n);
        }
    }
    return s;
}

// Tiles [m0, m1) x [n0, n1) into 2a x 2b neighborhoods handled by
// sum_by_lin. Requires m0, n0 >= 1, m1 <= 2 m0, n1 <= 2 n0 and even widths.
i128 double_sum(uint64_t m0, uint64_t m1, uint64_t n0, uint64_t n1, int64_t a, int64_t b,
                std::span<const int8_t> f, std::span<const int8_t> g, uint64_t x);

// sum mu(m) mu(n) floor(x/mn) over [A, A2) x [B, B2): sieves mu in windows
// of length delta per axis and dispatches each window pair to double_sum
// (gamma = 1) or the brute loop (gamma = 0). Each window pair is an
// independent task; the parallel and serial versions agree exactly.
i128 dd_sum(uint64_t A, uint64_t A2, uint64_t B, uint64_t B2, uint64_t x, uint64_t delta, int gamma,
            int64_t a, int64_t b);
i128 dd_sum_serial(uint64_t A, uint64_t A2, uint64_t B, uint64_t B2, uint64_t x, uint64_t delta,
                   int gamma, int64_t a, int64_t b);

struct LargeFreeParams {
    int64_t C = 10; // below this neighborhood size, brute-force the strip
    int64_t D = 8;  // boxes shrink by the factor 1 - 1/D
    bool serial = false;
};

// sum_{m,n <= v} mu(m) mu(n) floor(x/mn) for 1 <= v <= sqrt(x).
i128 large_free(uint64_t x, uint64_t v, const LargeFreeParams& params = {});

} // namespace mertens
