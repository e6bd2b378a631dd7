// Benchmark comparing the serial reference implementations against the
// OpenMP kernels: one rewriting step on a long generation, and the
// exhaustive membership sweep.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "fibgram/lsystem.hpp"
#include "fibgram/oracle.hpp"

using namespace fibgram;

namespace {

template <typename Fn>
double best_of_ms(int repeats, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fibgram serial-vs-parallel benchmark"};
    unsigned gen_n = 30;
    unsigned sweep_len = 14;
    int repeats = 5;
    app.add_option("--gen", gen_n, "generation whose rewriting step is timed");
    app.add_option("--sweep-len", sweep_len, "maximum string length for the membership sweep");
    app.add_option("--repeats", repeats, "timed repetitions per kernel; the best run counts");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    {
        const Word input = generate(LSystem::fib(), gen_n);
        Word serial_out, parallel_out;
        const double s_ms =
            best_of_ms(repeats, [&] { serial_out = derive_step(LSystem::fib(), input); });
        const double p_ms = best_of_ms(
            repeats, [&] { parallel_out = derive_step_parallel(LSystem::fib(), input); });
        const bool ok = serial_out == parallel_out;
        std::printf("derive step       gen=%-3u len=%-9zu serial %9.2f ms   parallel %9.2f ms   "
                    "speedup %5.2fx   %s\n",
                    gen_n, input.size(), s_ms, p_ms, s_ms / p_ms, ok ? "ok" : "MISMATCH");
        if (!ok) return 1;
    }

    {
        ExhaustiveReport serial_report, parallel_report;
        const double s_ms =
            best_of_ms(repeats, [&] { serial_report = exhaustive_membership_check_serial(sweep_len); });
        const double p_ms =
            best_of_ms(repeats, [&] { parallel_report = exhaustive_membership_check(sweep_len); });
        const bool ok = serial_report.accepted == parallel_report.accepted &&
                        serial_report.mismatches.empty() && parallel_report.mismatches.empty() &&
                        serial_report.strings_checked == parallel_report.strings_checked;
        std::printf("membership sweep  len<=%-3u n=%-9llu serial %9.2f ms   parallel %9.2f ms   "
                    "speedup %5.2fx   %s\n",
                    sweep_len, static_cast<unsigned long long>(serial_report.strings_checked),
                    s_ms, p_ms, s_ms / p_ms, ok ? "ok" : "MISMATCH");
        if (!ok) return 1;
    }

    return 0;
}
