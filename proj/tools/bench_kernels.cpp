// Benchmark of the OpenMP kernels against their serial references:
// brute-force Mertens windows, the streaming prefix-sum pass, and the
// double-sum tiling. Also reruns the end-to-end elementary mode at a few
// sizes. Results are checked for exact agreement while timing.
//
//   bench_kernels [--threads N] [--scale SMALL_X]

#include "mertens/driver.hpp"
#include "mertens/free_sum.hpp"
#include "mertens/nonfree.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mertens;

namespace {

double now_s() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <class F>
double timed(F&& fn) {
    double t0 = now_s();
    fn();
    return now_s() - t0;
}

void report(const char* name, double t_serial, double t_parallel, bool equal) {
    std::printf("%-22s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, t_serial,
                t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    uint64_t x = 200000000; // brute-force workload
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
#ifdef _OPENMP
            omp_set_num_threads(std::atoi(argv[++i]));
#else
            ++i;
#endif
        } else if (!std::strcmp(argv[i], "--scale") && i + 1 < argc) {
            x = std::strtoull(argv[++i], nullptr, 10);
        }
    }
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    {
        int64_t ms = 0, mp = 0;
        double ts = timed([&] { ms = brute_m_serial(x); });
        double tp = timed([&] { mp = brute_m(x); });
        report("brute_m", ts, tp, ms == mp);
    }
    {
        uint64_t r0 = 1000000, delta = 4000000;
        std::vector<int64_t> ss, sp;
        double ts = timed([&] { ss = sarr_serial(x, r0, delta, 0); });
        double tp = timed([&] { sp = sarr(x, r0, delta, 0); });
        report("sarr", ts, tp, ss == sp);
    }
    {
        uint64_t v = choose_v(x, 2.1213203435596424);
        i128 fs = 0, fp = 0;
        LargeFreeParams serial_params;
        serial_params.serial = true;
        double ts = timed([&] { fs = large_free(x, v, serial_params); });
        double tp = timed([&] { fp = large_free(x, v); });
        report("large_free", ts, tp, fs == fp);
    }
    {
        RunConfig cfg;
        cfg.x = x;
        double t = 0;
        RunReport rep;
        t = timed([&] { rep = run_mertens(cfg); });
        std::printf("%-22s M(%llu) = %lld in %.3fs (nonfree %.3fs, free %.3fs, M(u) %.3fs)\n",
                    "elementary", (unsigned long long)x, (long long)rep.mertens_value, t,
                    rep.t_nonfree_s, rep.t_free_s, rep.t_bruteu_s);
    }
    return 0;
}
