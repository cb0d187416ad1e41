#pragma once

// Segmented sieves of Eratosthenes: primality flags, Moebius values and
// full factorizations over a window, with factorizations held in the
// compact two-bitstring encoding (one string marks field boundaries, the
// other holds each prime with its leading bit stripped).

#include <cstdint>
#include <utility>
#include <vector>

namespace mertens {

// Primality flags over [1, N]; result[n] = 1 iff n is prime (result[0] unused).
std::vector<uint8_t> simple_sieve(uint64_t N);

// Primality flags over [n, n + delta]; result[j] = 1 iff n + j is prime.
std::vector<uint8_t> seg_primes(uint64_t n, uint64_t delta);

struct SegMuOptions {
    // Pre-initialize segments from a wheel mod 2^3*3^2*5*7*11 before
    // sieving by the remaining primes.
    bool wheel = false;
    // Track sum of ceil(log4 p) instead of the product of sieved primes
    // when deciding whether a prime factor > sqrt(top) remains.
    bool log4_counts = false;
};

// mu(n0 + j) for 0 <= j <= delta; n0 >= 1.
std::vector<int8_t> seg_mu(uint64_t n0, uint64_t delta, SegMuOptions opts = {});

// Variant reusing a caller-provided base prime table (primes[p] = 1 iff p
// prime, for all p <= isqrt(n0 + delta)). Hot paths sieve many windows
// against the same primes.
std::vector<int8_t> seg_mu_with_primes(uint64_t n0, uint64_t delta, const std::vector<uint8_t>& primes,
                                       SegMuOptions opts = {});

// Distinct prime factors of one integer, packed into two equal-length
// bitstrings; push order must be increasing, decode works from either end.
struct PackedFactors {
    uint64_t a = 0;
    uint64_t b = 0;

    bool empty() const { return a == 0; }
    void push(uint64_t p); // p >= 2, greater than everything pushed so far
    // Removes and returns the most recently pushed (largest) prime.
    uint64_t pop_largest();

    bool operator==(const PackedFactors&) const = default;
};

PackedFactors pack_factors(const std::vector<uint64_t>& primes_increasing);
std::vector<uint64_t> unpack_factors(PackedFactors pf);            // ascending
std::vector<uint64_t> unpack_factors_descending(PackedFactors pf); // descending

// Per-integer factorizations over [base, base + delta].
struct FactorizationSegment {
    uint64_t base = 0;
    std::vector<PackedFactors> packed;

    // (prime, exponent) pairs of base + j in increasing prime order,
    // decoded from the packed strings.
    std::vector<std::pair<uint64_t, uint32_t>> factors(size_t j) const;
};

// Prime factors p <= M of every integer in [n, n + delta], together with
// the smooth parts Pi[j] = prod p^{v_p(n+j)} over those p. Base primes are
// generated in blocks of length floor(sqrt(M)) to bound space.
std::pair<FactorizationSegment, std::vector<uint64_t>> sub_seg_sieve_fac(uint64_t n, uint64_t delta, uint64_t M);

// Full factorization of every integer in [n, n + delta], n >= 2 (n = 1 is
// tolerated and yields an empty list for 1).
FactorizationSegment seg_factor(uint64_t n, uint64_t delta);

} // namespace mertens
