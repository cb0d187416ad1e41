#include "mertens/driver.hpp"

#include "mertens/free_sum.hpp"
#include "mertens/nonfree.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mertens {

uint64_t choose_v(u128 x, double c) {
    if (x == 0) throw std::domain_error("choose_v: x must be >= 1");
    uint64_t root = isqrt(x < (u128(1) << 126) ? x : (u128(1) << 126) - 1);
    long double v;
    if (x < 16) {
        v = powl((long double)x, 0.4L);
    } else {
        long double lx = logl((long double)x);
        long double llx = logl(lx);
        v = (long double)c * powl((long double)x, 0.4L) * powl(llx / lx, 0.6L);
    }
    if (v < 1) return 1;
    if (v >= (long double)root) return root > 0 ? root : 1;
    return (uint64_t)v;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Largest neighborhood half-width b the schedule can use, rounded up.
u128 b_max_for(u128 x, u128 v) {
    u128 v4hi, v4;
    U256 v2 = mul_u128(v, v);
    if (v2.hi != 0) return ~(u128)0;
    U256 p = mul_u128(v2.lo, v2.lo);
    v4hi = p.hi;
    v4 = p.lo;
    if (v4hi != 0) return ~(u128)0;
    return (u128)icbrt(v4 / (6 * x)) + 1;
}

int64_t elementary_m(uint64_t x, uint64_t v, RunReport& rep, uint64_t delta_nonfree) {
    uint64_t u = isqrt(x);
    if (v > u) v = u;
    rep.u = u;
    rep.v = v;

    auto t0 = std::chrono::steady_clock::now();
    int64_t m_u = brute_m(u);
    rep.t_bruteu_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    i128 nonfree = large_nonfree(x, v, u, delta_nonfree);
    rep.t_nonfree_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    i128 fr = large_free(x, v);
    rep.t_free_s = seconds_since(t0);

    i128 M = 2 * (i128)m_u - nonfree - fr;
    return (int64_t)M;
}

} // namespace

GuardedV pick_v_guarded(u128 x, double c, bool c_explicit) {
    GuardedV g;
    g.c_used = c;
    uint64_t v = choose_v(x, c);
    if (overflow_guard(x, v, b_max_for(x, v))) {
        g.v = v;
        return g;
    }
    if (c_explicit) {
        double l2 = overflow_guard_log2(x, v);
        throw OverflowGuardError("overflow guard: intermediate bound log2 = " +
                                     std::to_string(l2) + " >= 127 for x = " + to_string_u128(x) +
                                     ", v = " + std::to_string(v),
                                 l2);
    }
    while (!overflow_guard(x, v, b_max_for(x, v))) {
        g.c_used /= 2;
        uint64_t nv = choose_v(x, g.c_used);
        if (nv >= v && v > 1) nv = v - 1;
        v = nv < 1 ? 1 : nv;
    }
    g.v = v;
    g.shrank = true;
    return g;
}

RunReport run_mertens(const RunConfig& config) {
    if (config.x < 1) throw std::domain_error("run_mertens: x must be >= 1");
#ifdef _OPENMP
    if (config.threads > 0) omp_set_num_threads(config.threads);
#endif
    RunReport rep;
    rep.x = config.x;
#ifdef _OPENMP
    rep.threads = omp_get_max_threads();
#else
    rep.threads = 1;
#endif

    if (config.mode == RunMode::brute) {
        auto t0 = std::chrono::steady_clock::now();
        rep.mertens_value = brute_m(config.x);
        rep.t_bruteu_s = seconds_since(t0);
        rep.u = config.x;
        rep.v = 0;
        return rep;
    }

    GuardedV gv = pick_v_guarded(config.x, config.c, config.c_explicit);
    if (gv.shrank)
        std::fprintf(stderr, "note: overflow guard shrank c to %g (v = %llu)\n", gv.c_used,
                     (unsigned long long)gv.v);
    uint64_t v = gv.v;

    if (config.mode == RunMode::verify && config.x > config.verify_cap)
        throw std::domain_error("verify mode: x exceeds the brute-force cap");

    rep.mertens_value = elementary_m(config.x, v, rep, config.delta_nonfree);

    if (config.mode == RunMode::verify) {
        int64_t ref = brute_m(config.x);
        if (ref != rep.mertens_value)
            throw VerifyMismatchError("verify mode: elementary " +
                                          std::to_string(rep.mertens_value) + " != brute " +
                                          std::to_string(ref) + " at x = " +
                                          std::to_string(config.x),
                                      rep.mertens_value, ref);
    }
    return rep;
}

BenchResult bench_scaling(const std::vector<uint64_t>& x_list, const RunConfig& config) {
    BenchResult res;
    for (uint64_t x : x_list) {
        RunConfig c = config;
        c.x = x;
        c.mode = RunMode::elementary;
        auto t0 = std::chrono::steady_clock::now();
        RunReport rep = run_mertens(c);
        BenchPoint p;
        p.x = x;
        p.seconds = seconds_since(t0);
        p.mertens_value = rep.mertens_value;
        res.points.push_back(p);
    }
    if (res.points.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (const BenchPoint& p : res.points) {
            if (p.seconds <= 0) continue;
            double lx = std::log2((double)p.x);
            double ly = std::log2(p.seconds);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++n;
        }
        if (n >= 2 && n * sxx - sx * sx != 0) res.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return res;
}

std::string csv_header() { return "x,mertens,v,u,t_nonfree_s,t_free_s,t_bruteu_s,threads"; }

std::string csv_row(const RunReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%llu,%lld,%llu,%llu,%.3f,%.3f,%.3f,%d",
                  (unsigned long long)r.x, (long long)r.mertens_value, (unsigned long long)r.v,
                  (unsigned long long)r.u, r.t_nonfree_s, r.t_free_s, r.t_bruteu_s, r.threads);
    return buf;
}

} // namespace mertens
