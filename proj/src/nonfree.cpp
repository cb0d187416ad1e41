#include "mertens/nonfree.hpp"

#include "mertens/divisor_sum.hpp"
#include "mertens/sieve.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mertens {

namespace {

int64_t sum_mu_window(uint64_t n0, uint64_t len, const std::vector<uint8_t>& primes) {
    if (len == 0) return 0;
    std::vector<int8_t> mu = seg_mu_with_primes(n0, len - 1, primes);
    int64_t s = 0;
    for (uint64_t j = 0; j < len; ++j) s += mu[j];
    return s;
}

} // namespace

int64_t brute_m_serial(uint64_t x) {
    if (x < 1) throw std::domain_error("brute_m: x must be >= 1");
    uint64_t delta = std::max<uint64_t>(isqrt(x), 1);
    uint64_t windows = (x + delta - 1) / delta;
    std::vector<uint8_t> primes = simple_sieve(isqrt(x));
    int64_t M = 0;
    for (uint64_t j = 0; j < windows; ++j) {
        uint64_t n0 = j * delta + 1;
        uint64_t len = std::min(delta, x - n0 + 1);
        M += sum_mu_window(n0, len, primes);
    }
    return M;
}

int64_t brute_m(uint64_t x) {
    if (x < 1) throw std::domain_error("brute_m: x must be >= 1");
    uint64_t delta = std::max<uint64_t>(isqrt(x), 1);
    uint64_t windows = (x + delta - 1) / delta;
    std::vector<uint8_t> primes = simple_sieve(isqrt(x));
    std::vector<int64_t> part(windows, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (uint64_t j = 0; j < windows; ++j) {
        uint64_t n0 = j * delta + 1;
        uint64_t len = std::min(delta, x - n0 + 1);
        part[j] = sum_mu_window(n0, len, primes);
    }
    int64_t M = 0;
    for (int64_t p : part) M += p;
    return M;
}

namespace {

// D(r; x/r) for every r in [lo, lo + len), written to out.
void fill_divisor_sums(uint64_t x, uint64_t lo, uint64_t len, int64_t* out) {
    if (len == 0) return;
    FactorizationSegment seg = seg_factor(lo, len - 1);
    for (uint64_t j = 0; j < len; ++j) out[j] = facto_sum_mu_ratio(seg.packed[j], x, lo + j);
}

} // namespace

std::vector<int64_t> sarr_serial(uint64_t x, uint64_t r0, uint64_t delta, int64_t S0) {
    std::vector<int64_t> S(delta + 1);
    fill_divisor_sums(x, r0, delta + 1, S.data());
    int64_t run = S0;
    for (uint64_t j = 0; j <= delta; ++j) {
        run += S[j];
        S[j] = run;
    }
    return S;
}

std::vector<int64_t> sarr(uint64_t x, uint64_t r0, uint64_t delta, int64_t S0) {
    std::vector<int64_t> S(delta + 1);
    uint64_t n = delta + 1;
#ifdef _OPENMP
    int workers = omp_get_max_threads();
#else
    int workers = 1;
#endif
    if (workers <= 1 || n < 2048) {
        fill_divisor_sums(x, r0, n, S.data());
        int64_t run = S0;
        for (uint64_t j = 0; j < n; ++j) {
            run += S[j];
            S[j] = run;
        }
        return S;
    }
    // Two-level prefix sums: per-block local scans, then a scan of the
    // block totals to produce offsets.
    uint64_t block = (n + workers - 1) / workers;
    uint64_t nblocks = (n + block - 1) / block;
    std::vector<int64_t> totals(nblocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
    for (uint64_t bidx = 0; bidx < nblocks; ++bidx) {
        uint64_t lo = bidx * block;
        uint64_t len = std::min(block, n - lo);
        fill_divisor_sums(x, r0 + lo, len, S.data() + lo);
        int64_t run = 0;
        for (uint64_t j = 0; j < len; ++j) {
            run += S[lo + j];
            S[lo + j] = run;
        }
        totals[bidx] = run;
    }
    std::vector<int64_t> offset(nblocks);
    int64_t run = S0;
    for (uint64_t bidx = 0; bidx < nblocks; ++bidx) {
        offset[bidx] = run;
        run += totals[bidx];
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
    for (uint64_t bidx = 0; bidx < nblocks; ++bidx) {
        uint64_t lo = bidx * block;
        uint64_t len = std::min(block, n - lo);
        for (uint64_t j = 0; j < len; ++j) S[lo + j] += offset[bidx];
    }
    return S;
}

i128 large_nonfree(uint64_t x, uint64_t v, uint64_t u, uint64_t delta_override) {
    if (v < 1 || v > u) throw std::domain_error("large_nonfree: need 1 <= v <= u");
    if (v >= u) return 0;

    uint64_t delta = delta_override;
    if (delta == 0) {
        uint64_t w = std::max(u, x / v);
        uint64_t r = isqrt(w);
        delta = r * r == w ? r : r + 1; // ceil(sqrt(max(u, x/v)))
    }

    uint64_t n0 = u + 1;
    uint64_t r0 = x / (u + 1) + 1;
    // S0 = 1: every r < r0 satisfies r <= x/r, so D(r; x/r) = [r = 1].
    std::vector<int64_t> S = sarr(x, r0, delta, 1);

    std::vector<int8_t> mu;
    i128 sigma = 0, total = 0;
    for (uint64_t n = u; n > v; --n) {
        if (n < n0) {
            n0 = n0 > delta + 1 ? n0 - (delta + 1) : 1;
            mu = seg_mu(n0, delta);
        }
        int64_t mun = mu[n - n0];
        uint64_t xn2 = x / (n * n);
        uint64_t xn = x / n;
        sigma += (i128)mun * xn2;
        while (xn > r0 + delta) {
            r0 += delta + 1;
            S = sarr(x, r0, delta, S[delta]);
        }
        total += 2 * (i128)mun * (-sigma + S[xn - r0]) + (i128)(mun * mun) * xn2;
    }
    return total;
}

} // namespace mertens
