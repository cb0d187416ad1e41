#include "mertens/divisor_sum.hpp"

#include <stdexcept>

namespace mertens {

namespace {

// Threshold a = num/den with den >= 1; comparisons cross-multiplied so the
// ratio is never formed.
struct Threshold {
    u128 num;
    u128 den;
};

// Sum of mu(e) over divisors e of the remaining primes in pf with
// m*e <= a. m is the product of primes already taken, mp the product of
// primes already passed over; m * rad(pf) * mp stays equal to rad(n).
int64_t subfactsm(PackedFactors pf, uint64_t m, uint64_t mp, const Threshold& a, uint64_t rad,
                  uint64_t* nodes) {
    if (nodes) ++*nodes;
    if ((u128)m * a.den > a.num) return 0;  // m > a: every extension overshoots
    if (pf.empty()) return 1;
    if ((u128)mp * a.num >= (u128)rad * a.den) return 0; // m'a >= n: all divisors fit, sum is 0
    uint64_t p = pf.pop_largest();
    return subfactsm(pf, m, mp * p, a, rad, nodes) - subfactsm(pf, m * p, mp, a, rad, nodes);
}

int64_t facto_sum_mu_packed(PackedFactors primes, Threshold a, uint64_t* nodes) {
    uint64_t rad = 1;
    for (PackedFactors t = primes; !t.empty();) rad *= t.pop_largest();
    return subfactsm(primes, 1, 1, a, rad, nodes);
}

} // namespace

int64_t facto_sum_mu(const std::vector<std::pair<uint64_t, uint32_t>>& factors, i128 a,
                     uint64_t* node_count) {
    PackedFactors pf;
    uint64_t last = 0;
    for (auto [p, e] : factors) {
        if (p <= last || e < 1) throw std::invalid_argument("facto_sum_mu: malformed factor list");
        pf.push(p);
        last = p;
    }
    if (a < 0) return 0;
    return facto_sum_mu_packed(pf, Threshold{(u128)a, 1}, node_count);
}

int64_t facto_sum_mu_ratio(PackedFactors primes, uint64_t x_num, uint64_t r_den, uint64_t* node_count) {
    if (r_den == 0) throw std::domain_error("facto_sum_mu_ratio: zero denominator");
    return facto_sum_mu_packed(primes, Threshold{x_num, r_den}, node_count);
}

} // namespace mertens
