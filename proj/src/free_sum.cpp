#include "mertens/free_sum.hpp"

#include "mertens/sieve.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mertens {

i128 linear_sum(std::span<const int8_t> f, std::span<const int8_t> g, int64_t a, int64_t b,
                const Rat& alpha0, const Rat& alpha1, const Rat& alpha2) {
    if ((int64_t)f.size() < 2 * a || (int64_t)g.size() < 2 * b)
        throw std::invalid_argument("linear_sum: weight spans too short");
    // floor(alpha0 + alpha1 m) over the common denominator of the two.
    i128 den01 = alpha0.den * alpha1.den;
    i128 S1 = 0, S10 = 0, S2 = 0, S20 = 0;
    for (int64_t m = -a; m < a; ++m) {
        int w = f[m + a];
        if (w == 0) continue;
        S1 += (i128)w * floor_div(alpha0.num * alpha1.den + alpha1.num * alpha0.den * m, den01);
        S10 += w;
    }
    for (int64_t n = -b; n < b; ++n) {
        int w = g[n + b];
        if (w == 0) continue;
        S2 += (i128)w * floor_div(alpha2.num * n, alpha2.den);
        S20 += w;
    }
    return S1 * S20 + S10 * S2;
}

CongruenceTables sum_table(std::span<const int8_t> g, int64_t b, i128 a0, int64_t q) {
    if (b < 1) throw std::domain_error("sum_table: b must be >= 1");
    if (q < 1 || q > 2 * b) throw std::domain_error("sum_table: need 1 <= q <= 2b");
    if ((int64_t)g.size() < 2 * b) throw std::invalid_argument("sum_table: weight span too short");
    CongruenceTables T;
    T.b = b;
    T.q = q;
    T.F.resize(2 * b);
    T.rho.assign(q, 0);
    T.sigma.assign(q + 1, 0);
    for (int64_t n = -b; n < -b + q; ++n) T.F[n + b] = g[n + b];
    for (int64_t n = -b + q; n < b; ++n) T.F[n + b] = T.F[n - q + b] + g[n + b];
    // The top q entries carry the class totals; a0 n walks every residue.
    int64_t r = (int64_t)mod_nonneg(a0 * (b - q), q);
    for (int64_t n = b - q; n < b; ++n) {
        T.rho[r] = T.F[n + b];
        r = (int64_t)mod_nonneg(r + a0, q);
    }
    for (int64_t i = 1; i < q; ++i) T.sigma[i + 1] = T.sigma[i] + T.rho[q - i];
    return T;
}

int64_t ray_sum(std::span<const int8_t> g, int64_t q, int64_t b, int s_delta) {
    int64_t S = 0;
    if (s_delta < 0) {
        for (int64_t n = q; n <= b - 1; n += q) S += g[n + b];
    } else if (s_delta > 0) {
        for (int64_t n = q; n <= b; n += q) S += g[b - n];
    }
    return S;
}

int64_t sum_inter(const CongruenceTables& T, i128 r, const IntInterval& I) {
    if (I.is_empty()) return 0;
    const int64_t b = T.b, q = T.q;
    i128 hi = b - 1;
    if (I.has_hi() && I.hi < hi) hi = I.hi;
    if (hi < -b) return 0;
    i128 r1 = flcong(hi, r, q);
    if (r1 < -b) return 0;
    int64_t G1 = T.F[(int64_t)r1 + b];
    if (!I.has_lo()) return G1;
    i128 r0 = flcong(I.lo - 1, r, q);
    if (r0 > r1) return 0;
    if (r0 >= -b) return G1 - T.F[(int64_t)r0 + b];
    return G1;
}

int64_t special1(const CongruenceTables& T, u128 x, int64_t q, i128 a0, i128 a0_inv, i128 floor_R0,
                 int64_t r0, uint64_t n_center, uint64_t m_abs, int64_t b) {
    (void)b;
    i128 gamma1 = (-floor_R0 * q - (r0 + 1) + a0 * (i128)n_center) * (i128)m_abs;
    i128 r = mod_nonneg((-1 - (i128)r0) * a0_inv, q);
    IntInterval I = quad_ineq_z(-a0 * (i128)m_abs, gamma1, (i128)x * q).shifted(-(i128)n_center);
    return sum_inter(T, r, IntInterval::all()) - sum_inter(T, r, I);
}

int64_t special0a(const CongruenceTables& T, int64_t q, i128 a0, i128 a0_inv, int64_t r0, int64_t b,
                  const Rat& Q_ratio, int s_beta, int s_delta) {
    (void)a0;
    (void)b;
    i128 r = mod_nonneg(-(i128)r0 * a0_inv, q);
    if (0 < r0 && r0 < q) {
        IntInterval I;
        if (s_delta > 0)
            I = IntInterval::ge(-Q_ratio.floor());
        else if (s_delta < 0)
            I = IntInterval::le(-Q_ratio.ceil());
        else if (s_beta >= 0)
            I = IntInterval::all();
        else
            I = IntInterval::empty();
        return sum_inter(T, r, I);
    }
    // r0 == 0 (mod q): the interval degenerates to rays around the origin.
    if (s_delta == 0 || s_beta == 0) return 0;
    if (s_beta < 0) {
        if (s_delta < 0)
            return sum_inter(T, r, IntInterval::le(-Q_ratio.ceil())) +
                   sum_inter(T, r, IntInterval::ge(1));
        return sum_inter(T, r, IntInterval::le(-1)) +
               sum_inter(T, r, IntInterval::ge(-Q_ratio.floor()));
    }
    IntInterval I = s_delta > 0 ? IntInterval::bounded(-Q_ratio.floor(), -1)
                                : IntInterval::bounded(1, -Q_ratio.ceil());
    return sum_inter(T, r, I);
}

namespace {

// {n : beta + delta n < 0} as an integer interval; Q_ratio = beta/delta.
IntInterval j_side(const Rat& Q_ratio, int s_beta, int s_delta) {
    if (s_delta > 0) return IntInterval::le(-Q_ratio.floor() - 1);
    if (s_delta < 0) return IntInterval::ge(-Q_ratio.ceil() + 1);
    return s_beta < 0 ? IntInterval::all() : IntInterval::empty();
}

} // namespace

int64_t special0b(const CongruenceTables& T, u128 x, int64_t q, i128 a0, i128 a0_inv, i128 floor_R0,
                  int64_t r0, uint64_t n_center, uint64_t m_abs, int64_t b, const Rat& Q_ratio,
                  int s_beta, int s_delta) {
    (void)b;
    i128 gamma1 = (-floor_R0 * q - r0 + a0 * (i128)n_center) * (i128)m_abs;
    IntInterval I = quad_ineq_z(-a0 * (i128)m_abs, gamma1, (i128)x * q).shifted(-(i128)n_center);
    IntInterval J = j_side(Q_ratio, s_beta, s_delta);
    i128 r = mod_nonneg(-(i128)r0 * a0_inv, q);
    return sum_inter(T, r, J) - sum_inter(T, r, intersect(I, J));
}

int64_t special00(const CongruenceTables& T, u128 x, i128 a0, i128 floor_R0, int64_t r0,
                  uint64_t n_center, uint64_t m_abs, int64_t b, const Rat& Q_ratio, int s_beta,
                  int s_delta) {
    (void)b;
    IntInterval J = j_side(Q_ratio, s_beta, s_delta);
    // nc[j]: offsets where the threshold-j inequality fails (no correction).
    IntInterval nc[2];
    for (int j = 0; j < 2; ++j) {
        if (a0 != 0) {
            i128 gamma1 = (-floor_R0 - (r0 + j) + a0 * (i128)n_center) * (i128)m_abs;
            nc[j] = quad_ineq_z(-a0 * (i128)m_abs, gamma1, (i128)x).shifted(-(i128)n_center);
        } else {
            i128 K = floor_R0 + r0 + j;
            if (K <= 0)
                nc[j] = IntInterval::empty(); // x/mn >= K holds everywhere
            else
                nc[j] = IntInterval::ge(floor_div((i128)x, (i128)m_abs * K) - (i128)n_center + 1);
        }
    }
    int64_t S = sum_inter(T, 0, intersect(nc[0], J)) + sum_inter(T, 0, intersect(nc[1], complement(J)));
    return sum_inter(T, 0, IntInterval::all()) - S;
}

i128 sum_by_lin(std::span<const int8_t> f, std::span<const int8_t> g, uint64_t x, uint64_t m_center,
                uint64_t n_center, int64_t a, int64_t b) {
    if (a < 1 || b < 1) throw std::domain_error("sum_by_lin: a, b must be >= 1");
    if ((i128)m_center - a < 1 || (i128)n_center - b < 1)
        throw std::domain_error("sum_by_lin: window must stay in the first quadrant");
    if ((int64_t)f.size() < 2 * a || (int64_t)g.size() < 2 * b)
        throw std::invalid_argument("sum_by_lin: weight spans too short");

    const i128 mc = m_center, nc = n_center;
    const i128 den_R = mc * mc * nc; // alpha0 + alpha1 m lives over this denominator
    const i128 den_y = mc * nc * nc; // alpha2 = -x / den_y

    // Separated sum S0, evaluated over the shared denominators (this is
    // linear_sum specialised so the cross products stay inside 128 bits).
    i128 S1 = 0, S10 = 0, S2 = 0, S20 = 0;
    for (int64_t m = -a; m < a; ++m) {
        int w = f[m + a];
        if (w == 0) continue;
        S1 += (i128)w * floor_div((i128)x * (mc - m), den_R);
        S10 += w;
    }
    for (int64_t n = -b; n < b; ++n) {
        int w = g[n + b];
        if (w == 0) continue;
        S2 += (i128)w * floor_div(-(i128)x * n, den_y);
        S20 += w;
    }
    i128 total = S1 * S20 + S10 * S2;

    DiophApprox dio = dioph_appr(Rat(-(i128)x, den_y), 2 * b);
    const int64_t q = (int64_t)dio.q;
    const i128 a0 = dio.a0;
    const i128 num_delta = -(i128)x * q - a0 * den_y; // delta over q * den_y; sign matches dio.s
    const int s_delta = sgn(num_delta);

    const int64_t Z = ray_sum(g, q, b, s_delta);
    const CongruenceTables T = sum_table(g, b, a0, q);

    for (int64_t m = -a; m < a; ++m) {
        int w = f[m + a];
        if (w == 0) continue;
        i128 numR = (i128)x * (mc - m);
        i128 fl = floor_div(numR, den_R);
        i128 fr = numR - fl * den_R;
        // Nearest multiple of 1/q below-or-at {R0}+1/2q, ties upward.
        int64_t r0 = (int64_t)floor_div(2 * fr * q + den_R, 2 * den_R); // in [0, q]
        i128 num_beta = fr * q - (i128)r0 * den_R;                      // beta over q * den_R
        int s_beta = sgn(num_beta);
        Rat Q_ratio = s_delta == 0 ? Rat(0, 1) : Rat(num_beta * nc, mc * num_delta);
        uint64_t m_abs = (uint64_t)(mc + m);

        i128 Tm = T.sigma[r0] + special0a(T, q, a0, dio.a0_inv, r0, b, Q_ratio, s_beta, s_delta);
        if (q > 1) {
            Tm += special1(T, x, q, a0, dio.a0_inv, fl, r0, n_center, m_abs, b);
            Tm += special0b(T, x, q, a0, dio.a0_inv, fl, r0, n_center, m_abs, b, Q_ratio, s_beta,
                            s_delta);
        } else {
            Tm += special00(T, x, a0, fl, r0, n_center, m_abs, b, Q_ratio, s_beta, s_delta);
        }
        if (0 < r0 && r0 < q) Tm += Z;
        total += (i128)w * Tm;
    }
    return total;
}

i128 double_sum(uint64_t m0, uint64_t m1, uint64_t n0, uint64_t n1, int64_t a, int64_t b,
                std::span<const int8_t> f, std::span<const int8_t> g, uint64_t x) {
    if (m0 < 1 || n0 < 1 || m1 < m0 || n1 < n0) throw std::domain_error("double_sum: bad range");
    if (m1 > 2 * m0 || n1 > 2 * n0) throw std::domain_error("double_sum: range too wide");
    if ((m1 - m0) % 2 != 0 || (n1 - n0) % 2 != 0)
        throw std::domain_error("double_sum: widths must be even");
    if (a < 1 || b < 1) throw std::domain_error("double_sum: a, b must be >= 1");
    if (f.size() < m1 - m0 || g.size() < n1 - n0)
        throw std::invalid_argument("double_sum: weight spans too short");

    i128 S = 0;
    for (uint64_t mlo = m0; mlo < m1; mlo += 2 * a) {
        uint64_t mhi = std::min(mlo + 2 * a, m1);
        uint64_t mc = (mlo + mhi) / 2;
        int64_t ma = (int64_t)((mhi - mlo) / 2);
        for (uint64_t nlo = n0; nlo < n1; nlo += 2 * b) {
            uint64_t nhi = std::min(nlo + 2 * b, n1);
            uint64_t ncen = (nlo + nhi) / 2;
            int64_t nb = (int64_t)((nhi - nlo) / 2);
            S += sum_by_lin(f.subspan(mlo - m0, 2 * ma), g.subspan(nlo - n0, 2 * nb), x, mc, ncen,
                            ma, nb);
        }
    }
    return S;
}

namespace {

struct WindowTask {
    uint64_t m0, m1, n0, n1;
};

i128 dd_sum_impl(uint64_t A, uint64_t A2, uint64_t B, uint64_t B2, uint64_t x, uint64_t delta,
                 int gamma, int64_t a, int64_t b, bool parallel) {
    if (A < 1 || B < 1 || A2 < A || B2 < B) throw std::domain_error("dd_sum: bad range");
    if (delta < 1) throw std::domain_error("dd_sum: delta must be >= 1");
    if (gamma == 1) {
        if (delta % 2 != 0) throw std::domain_error("dd_sum: delta must be even");
        if ((A2 - A) % 2 != 0 || (B2 - B) % 2 != 0)
            throw std::domain_error("dd_sum: range widths must be even");
    }
    std::vector<WindowTask> tasks;
    for (uint64_t m0 = A; m0 < A2; m0 += delta)
        for (uint64_t n0 = B; n0 < B2; n0 += delta)
            tasks.push_back({m0, std::min(m0 + delta, A2), n0, std::min(n0 + delta, B2)});

    std::vector<i128> part(tasks.size(), 0);
    // Each task sieves its own mu windows (cheap next to the window work,
    // and it keeps tasks independent).
    auto run = [&](size_t i) {
        const WindowTask& t = tasks[i];
        std::vector<int8_t> mu = seg_mu(t.m0, t.m1 - 1 - t.m0);
        std::vector<int8_t> mu2 = seg_mu(t.n0, t.n1 - 1 - t.n0);
        std::span<const int8_t> fs(mu.data(), mu.size());
        std::span<const int8_t> gs(mu2.data(), mu2.size());
        if (gamma == 1) {
            part[i] = double_sum(t.m0, t.m1, t.n0, t.n1, a, b, fs, gs, x);
        } else {
            part[i] = brute_double_sum(t.m0, t.m1, t.n0, t.n1, fs, gs,
                                       [x](uint64_t m, uint64_t n) { return (i128)(x / (m * n)); });
        }
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (size_t i = 0; i < tasks.size(); ++i) run(i);
    } else {
        for (size_t i = 0; i < tasks.size(); ++i) run(i);
    }
    i128 S = 0;
    for (i128 p : part) S += p;
    return S;
}

} // namespace

i128 dd_sum(uint64_t A, uint64_t A2, uint64_t B, uint64_t B2, uint64_t x, uint64_t delta, int gamma,
            int64_t a, int64_t b) {
    return dd_sum_impl(A, A2, B, B2, x, delta, gamma, a, b, true);
}

i128 dd_sum_serial(uint64_t A, uint64_t A2, uint64_t B, uint64_t B2, uint64_t x, uint64_t delta,
                   int gamma, int64_t a, int64_t b) {
    return dd_sum_impl(A, A2, B, B2, x, delta, gamma, a, b, false);
}

i128 large_free(uint64_t x, uint64_t v, const LargeFreeParams& params) {
    if (v < 1) throw std::domain_error("large_free: v must be >= 1");
    if ((u128)v * v > x) throw std::domain_error("large_free: v must be <= sqrt(x)");
    const int64_t C = params.C, D = params.D;
    if (C < 1 || D < 2) throw std::domain_error("large_free: bad tuning constants");

    auto dd = [&](uint64_t lA, uint64_t lA2, uint64_t lB, uint64_t lB2, uint64_t dl, int gm,
                  int64_t pa, int64_t pb) {
        return params.serial ? dd_sum_serial(lA, lA2, lB, lB2, x, dl, gm, pa, pb)
                             : dd_sum(lA, lA2, lB, lB2, x, dl, gm, pa, pb);
    };

    uint64_t rv = isqrt(v);
    uint64_t sq_ceil = rv * rv == v ? rv : rv + 1; // ceil(sqrt v)
    u128 c3x6 = (u128)(C * C * C) * 6 * x;
    uint64_t thrA = 2 * (iroot4(c3x6) + 1);
    uint64_t floorA = std::max<uint64_t>({thrA, sq_ceil, (uint64_t)(2 * D)});

    i128 S = 0;
    uint64_t A2 = v + 1;
    while (A2 >= floorA) {
        uint64_t B2 = A2;
        uint64_t A = A2 - 2 * (A2 / (2 * D));
        uint64_t thrB = 2 * (icbrt(c3x6 / A) + 1);
        uint64_t floorB = std::max<uint64_t>({thrB, sq_ceil, (uint64_t)(2 * D)});
        while (B2 >= floorB) {
            uint64_t B = B2 - 2 * (B2 / (2 * D));
            u128 A4 = (u128)A * A * (u128)((u128)A * A);
            u128 AB3 = (u128)A * B * (u128)((u128)B * B);
            int64_t a = std::max<int64_t>(1, (int64_t)icbrt(A4 / (6 * (u128)x)));
            int64_t b = std::max<int64_t>(1, (int64_t)icbrt(AB3 / (6 * (u128)x)));
            uint64_t step = (uint64_t)(2 * std::max(a, b));
            uint64_t delta = ((sq_ceil + step - 1) / step) * step; // even, multiple of the tile
            i128 piece = dd(A, A2, B, B2, delta, 1, a, b);
            S += (A == B) ? piece : 2 * piece;
            B2 = B;
        }
        if (B2 > 1) S += 2 * dd(A, A2, 1, B2, sq_ceil, 0, 0, 0);
        A2 = A;
    }
    if (A2 > 1) S += dd(1, A2, 1, A2, sq_ceil, 0, 0, 0);
    return S;
}

} // namespace mertens
