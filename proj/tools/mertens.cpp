// Command-line front end.
//
//   mertens X [--c FLOAT] [--threads N] [--mode elementary|brute|verify|bench]
//             [--csv] [--x-list X1,X2,...] [--verify-cap X]
//
// Plain output is a single line "M(X) = VALUE"; --csv switches to one CSV
// row per x. Exit codes: 0 success, 1 usage/run error, 2 overflow-guard
// refusal, 3 verify-mode mismatch.

#include "mertens/driver.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

using namespace mertens;

namespace {

void usage(FILE* out) {
    std::fprintf(out,
                 "usage: mertens X [--c FLOAT] [--threads N]\n"
                 "               [--mode elementary|brute|verify|bench] [--csv]\n"
                 "               [--x-list X1,X2,...] [--verify-cap X]\n");
}

uint64_t parse_x(const std::string& s) {
    u128 v = parse_u128(s);
    if (v < 1 || v > (u128)INT64_MAX)
        throw std::invalid_argument("x out of supported range [1, 2^63)");
    return (uint64_t)v;
}

std::vector<uint64_t> parse_list(const std::string& s) {
    std::vector<uint64_t> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_x(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(stderr);
        return 1;
    }
    RunConfig cfg;
    try {
        cfg.x = parse_x(argv[1]);
        for (int i = 2; i < argc; ++i) {
            std::string arg = argv[i];
            auto need_value = [&]() -> std::string {
                if (i + 1 >= argc) throw std::invalid_argument("missing value for " + arg);
                return argv[++i];
            };
            if (arg == "--c") {
                cfg.c = std::strtod(need_value().c_str(), nullptr);
                cfg.c_explicit = true;
                if (cfg.c <= 0) throw std::invalid_argument("--c must be positive");
            } else if (arg == "--threads") {
                cfg.threads = std::atoi(need_value().c_str());
                if (cfg.threads < 1) throw std::invalid_argument("--threads must be >= 1");
            } else if (arg == "--mode") {
                std::string m = need_value();
                if (m == "elementary")
                    cfg.mode = RunMode::elementary;
                else if (m == "brute")
                    cfg.mode = RunMode::brute;
                else if (m == "verify")
                    cfg.mode = RunMode::verify;
                else if (m == "bench")
                    cfg.mode = RunMode::bench;
                else
                    throw std::invalid_argument("unknown mode: " + m);
            } else if (arg == "--csv") {
                cfg.csv = true;
            } else if (arg == "--x-list") {
                cfg.x_list = parse_list(need_value());
            } else if (arg == "--verify-cap") {
                cfg.verify_cap = parse_x(need_value());
            } else {
                throw std::invalid_argument("unknown option: " + arg);
            }
        }
        if (cfg.threads == 0) {
            if (const char* env = std::getenv("MERTENS_THREADS")) {
                int t = std::atoi(env);
                if (t >= 1) cfg.threads = t;
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        usage(stderr);
        return 1;
    }

    try {
        if (cfg.mode == RunMode::bench) {
            std::vector<uint64_t> xs = cfg.x_list.empty() ? std::vector<uint64_t>{cfg.x} : cfg.x_list;
            BenchResult res = bench_scaling(xs, cfg);
            std::printf("x,seconds,mertens\n");
            for (const BenchPoint& p : res.points)
                std::printf("%llu,%.3f,%lld\n", (unsigned long long)p.x, p.seconds,
                            (long long)p.mertens_value);
            if (res.slope)
                std::printf("# slope log2(t) vs log2(x) = %.4f\n", *res.slope);
            return 0;
        }
        std::vector<uint64_t> xs = cfg.x_list.empty() ? std::vector<uint64_t>{cfg.x} : cfg.x_list;
        if (cfg.csv) std::printf("%s\n", csv_header().c_str());
        for (uint64_t x : xs) {
            RunConfig c = cfg;
            c.x = x;
            RunReport rep = run_mertens(c);
            if (cfg.csv)
                std::printf("%s\n", csv_row(rep).c_str());
            else
                std::printf("M(%llu) = %lld\n", (unsigned long long)x,
                            (long long)rep.mertens_value);
        }
        return 0;
    } catch (const OverflowGuardError& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return 2;
    } catch (const VerifyMismatchError& e) {
        std::fprintf(stderr, "MISMATCH: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
