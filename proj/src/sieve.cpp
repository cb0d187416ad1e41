#include "mertens/sieve.hpp"

#include "mertens/arith.hpp"

#include <bit>
#include <stdexcept>

namespace mertens {

std::vector<uint8_t> simple_sieve(uint64_t N) {
    std::vector<uint8_t> P(N + 1, 0);
    if (N >= 2) P[2] = 1;
    for (uint64_t n = 3; n <= N; n += 2) P[n] = 1;
    for (uint64_t m = 3; m * m <= N; m += 2) {
        if (!P[m]) continue;
        for (uint64_t n = m * m; n <= N; n += 2 * m) P[n] = 0;
    }
    return P;
}

std::vector<uint8_t> seg_primes(uint64_t n, uint64_t delta) {
    std::vector<uint8_t> S(delta + 1, 1);
    for (uint64_t j = 0; j + n <= 1 && j <= delta; ++j) S[j] = 0; // 0 and 1 are not prime
    uint64_t M = isqrt(n + delta);
    std::vector<uint8_t> P = simple_sieve(M);
    for (uint64_t m = 2; m <= M; ++m) {
        if (!P[m]) continue;
        uint64_t start = ((n + m - 1) / m) * m;
        if (start < 2 * m) start = 2 * m; // never strike m itself
        for (uint64_t np = start; np <= n + delta; np += m) S[np - n] = 0;
    }
    return S;
}

namespace {

// ceil(log4 v); 0 for v <= 1.
inline uint32_t ceil_log4(uint64_t v) {
    if (v <= 1) return 0;
    return (uint32_t)(std::bit_width(v - 1) + 1) / 2;
}

constexpr uint32_t kWheelMod = 27720; // 2^3 * 3^2 * 5 * 7 * 11
constexpr uint32_t kWheelPrimes[5] = {2, 3, 5, 7, 11};

// Effect of the wheel primes on each residue class mod 27720: parity of
// sign flips, zeroing by 4 and 9 (the square divisors of the modulus),
// partial products and partial ceil(log4) sums.
struct Wheel {
    std::vector<int8_t> sign;
    std::vector<uint8_t> zero;
    std::vector<uint32_t> pi;
    std::vector<uint8_t> l4;
    Wheel()
        : sign(kWheelMod, 1), zero(kWheelMod, 0), pi(kWheelMod, 1), l4(kWheelMod, 0) {
        for (uint32_t p : kWheelPrimes) {
            for (uint32_t c = 0; c < kWheelMod; c += p) {
                sign[c] = (int8_t)-sign[c];
                pi[c] *= p;
                l4[c] = (uint8_t)(l4[c] + ceil_log4(p));
            }
        }
        for (uint32_t c = 0; c < kWheelMod; c += 4) zero[c] = 1;
        for (uint32_t c = 0; c < kWheelMod; c += 9) zero[c] = 1;
    }
};

const Wheel& wheel() {
    static const Wheel w;
    return w;
}

inline bool is_wheel_prime(uint64_t p) { return p == 2 || p == 3 || p == 5 || p == 7 || p == 11; }

} // namespace

std::vector<int8_t> seg_mu_with_primes(uint64_t n0, uint64_t delta, const std::vector<uint8_t>& primes,
                                       SegMuOptions opts) {
    if (n0 < 1) throw std::domain_error("seg_mu: n0 must be >= 1");
    const uint64_t top = n0 + delta;
    const uint64_t rt = isqrt(top);
    if (primes.size() <= rt) throw std::invalid_argument("seg_mu_with_primes: prime table too short");

    std::vector<int8_t> m(delta + 1, 1);
    std::vector<uint64_t> pi;
    std::vector<uint16_t> l4sum;
    if (opts.log4_counts)
        l4sum.assign(delta + 1, 0);
    else
        pi.assign(delta + 1, 1);

    if (opts.wheel) {
        const Wheel& w = wheel();
        uint32_t c = (uint32_t)(n0 % kWheelMod);
        for (uint64_t j = 0; j <= delta; ++j) {
            m[j] = w.zero[c] ? (int8_t)0 : w.sign[c];
            if (opts.log4_counts)
                l4sum[j] = w.l4[c];
            else
                pi[j] = w.pi[c];
            if (++c == kWheelMod) c = 0;
        }
    }

    for (uint64_t p = 2; p <= rt; ++p) {
        if (!primes[p]) continue;
        bool on_wheel = opts.wheel && is_wheel_prime(p);
        if (!on_wheel) {
            uint64_t start = ((n0 + p - 1) / p) * p;
            uint32_t lp = ceil_log4(p);
            for (uint64_t n = start; n <= top; n += p) {
                uint64_t j = n - n0;
                m[j] = (int8_t)-m[j];
                if (opts.log4_counts)
                    l4sum[j] = (uint16_t)(l4sum[j] + lp);
                else
                    pi[j] *= p;
            }
        }
        // 4- and 9-zeroing came with the wheel pattern; 25, 49, 121 did not.
        if (on_wheel && p <= 3) continue;
        uint64_t p2 = p * p;
        if (p2 > top) continue;
        uint64_t start = ((n0 + p2 - 1) / p2) * p2;
        for (uint64_t n = start; n <= top; n += p2) m[n - n0] = 0;
    }

    // A surviving entry with an incomplete product has exactly one prime
    // factor above sqrt(top); account for its sign.
    for (uint64_t j = 0; j <= delta; ++j) {
        if (m[j] == 0) continue;
        bool large_prime_left = opts.log4_counts ? (l4sum[j] < ceil_log4(n0 + j)) : (pi[j] != n0 + j);
        if (large_prime_left) m[j] = (int8_t)-m[j];
    }
    return m;
}

std::vector<int8_t> seg_mu(uint64_t n0, uint64_t delta, SegMuOptions opts) {
    return seg_mu_with_primes(n0, delta, simple_sieve(isqrt(n0 + delta)), opts);
}

void PackedFactors::push(uint64_t p) {
    if (p < 2) throw std::domain_error("PackedFactors::push: p must be >= 2");
    int k = std::bit_width(p) - 1; // floor(log2 p)
    if (std::bit_width(a) + k > 64) throw std::overflow_error("PackedFactors::push: out of bits");
    a = (a << k) | (1ull << (k - 1));
    b = (b << k) | (p - (1ull << k));
}

uint64_t PackedFactors::pop_largest() {
    if (a == 0) throw std::domain_error("PackedFactors::pop_largest: empty");
    int k = std::countr_zero(a) + 1;
    uint64_t mask = (k < 64) ? ((1ull << k) - 1) : ~0ull;
    uint64_t p = (1ull << k) | (b & mask);
    a >>= k;
    b >>= k;
    return p;
}

PackedFactors pack_factors(const std::vector<uint64_t>& primes_increasing) {
    PackedFactors pf;
    uint64_t last = 0;
    for (uint64_t p : primes_increasing) {
        if (p <= last) throw std::domain_error("pack_factors: primes must be strictly increasing");
        pf.push(p);
        last = p;
    }
    return pf;
}

std::vector<uint64_t> unpack_factors(PackedFactors pf) {
    std::vector<uint64_t> out;
    uint64_t a = pf.a, b = pf.b;
    while (a != 0) {
        int t = std::bit_width(a);
        int h = std::bit_width(a ^ (1ull << (t - 1))); // next field's marker
        int k = t - h;
        uint64_t field = (b >> h) & ((1ull << k) - 1);
        out.push_back((1ull << k) | field);
        uint64_t mask = h ? ((1ull << h) - 1) : 0;
        a &= mask;
        b &= mask;
    }
    return out;
}

std::vector<uint64_t> unpack_factors_descending(PackedFactors pf) {
    std::vector<uint64_t> out;
    while (!pf.empty()) out.push_back(pf.pop_largest());
    return out;
}

std::vector<std::pair<uint64_t, uint32_t>> FactorizationSegment::factors(size_t j) const {
    std::vector<std::pair<uint64_t, uint32_t>> out;
    uint64_t v = base + j;
    for (uint64_t p : unpack_factors(packed[j])) {
        uint32_t e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

std::pair<FactorizationSegment, std::vector<uint64_t>> sub_seg_sieve_fac(uint64_t n, uint64_t delta, uint64_t M) {
    if (n < 1) throw std::domain_error("sub_seg_sieve_fac: n must be >= 1");
    if (M < 2) throw std::domain_error("sub_seg_sieve_fac: M must be >= 2");
    FactorizationSegment seg;
    seg.base = n;
    seg.packed.assign(delta + 1, PackedFactors{});
    std::vector<uint64_t> pi(delta + 1, 1);
    const uint64_t top = n + delta;

    uint64_t block = isqrt(M);
    if (block == 0) block = 1;
    for (uint64_t lo = 1; lo <= M; lo += block) {
        std::vector<uint8_t> P = seg_primes(lo, block);
        for (uint64_t p = lo; p < lo + block && p <= M; ++p) {
            if (!P[p - lo]) continue;
            // d runs over the powers of p up to the window top
            for (uint64_t d = p;;) {
                uint64_t start = ((n + d - 1) / d) * d;
                for (uint64_t np = start; np <= top; np += d) {
                    if (d == p) seg.packed[np - n].push(p);
                    pi[np - n] *= p;
                }
                if (d > top / p) break;
                d *= p;
            }
        }
    }
    return {std::move(seg), std::move(pi)};
}

FactorizationSegment seg_factor(uint64_t n, uint64_t delta) {
    if (n < 1) throw std::domain_error("seg_factor: n must be >= 1");
    uint64_t M = isqrt(n + delta);
    if (M < 2) M = 2;
    auto [seg, pi] = sub_seg_sieve_fac(n, delta, M);
    for (uint64_t j = 0; j <= delta; ++j) {
        uint64_t v = n + j;
        if (v >= 2 && pi[j] != v) seg.packed[j].push(v / pi[j]);
    }
    return seg;
}

} // namespace mertens
