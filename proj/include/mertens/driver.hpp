#pragma once

// Top-level assembly: M(x) = 2 M(u) - (large non-free pass) - (large free
// pass) with u = floor(sqrt x), plus run modes, parameter selection and
// the scaling benchmark.

#include "mertens/arith.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mertens {

enum class RunMode { elementary, brute, verify, bench };

struct RunConfig {
    uint64_t x = 0;
    double c = 2.1213203435596424; // 3/sqrt(2); tuning constant for v
    bool c_explicit = false;       // explicit c is binding: no auto-shrink on guard failure
    int threads = 0;               // 0 = leave the OpenMP default
    RunMode mode = RunMode::elementary;
    uint64_t delta_nonfree = 0;    // 0 = default window length
    uint64_t verify_cap = 1000000000; // brute cost guard in verify mode
    bool csv = false;
    std::vector<uint64_t> x_list; // bench mode
};

struct RunReport {
    uint64_t x = 0;
    int64_t mertens_value = 0;
    uint64_t v = 0;
    uint64_t u = 0;
    double t_nonfree_s = 0;
    double t_free_s = 0;
    double t_bruteu_s = 0;
    int threads = 1;
};

// v = floor(c * x^(2/5) * (log log x / log x)^(3/5)), clamped to
// [1, floor(sqrt x)]; below x = 16 falls back to floor(x^(2/5)).
uint64_t choose_v(u128 x, double c);

// Raised by elementary mode when the 127-bit guard rejects the chosen
// parameters (and c was pinned by the caller).
struct OverflowGuardError : std::runtime_error {
    double log2_bound;
    OverflowGuardError(const std::string& msg, double l2)
        : std::runtime_error(msg), log2_bound(l2) {}
};

// Raised by verify mode on an elementary/brute mismatch.
struct VerifyMismatchError : std::runtime_error {
    int64_t elementary_value, brute_value;
    VerifyMismatchError(const std::string& msg, int64_t e, int64_t b)
        : std::runtime_error(msg), elementary_value(e), brute_value(b) {}
};

// v selection with the 127-bit guard applied: explicit c throws
// OverflowGuardError when the guard rejects; otherwise c shrinks until the
// guard passes (v = 1 always does).
struct GuardedV {
    uint64_t v = 1;
    double c_used = 0;
    bool shrank = false;
};
GuardedV pick_v_guarded(u128 x, double c, bool c_explicit);

RunReport run_mertens(const RunConfig& config);

struct BenchPoint {
    uint64_t x = 0;
    double seconds = 0;
    int64_t mertens_value = 0;
};

struct BenchResult {
    std::vector<BenchPoint> points;
    std::optional<double> slope; // least-squares slope of log2 t vs log2 x; absent for < 2 points
};

BenchResult bench_scaling(const std::vector<uint64_t>& x_list, const RunConfig& config);

std::string csv_header();
std::string csv_row(const RunReport& r);

} // namespace mertens
