// Compares the OpenMP lattice/spectrum kernels against the serial reference
// on seeded random rings.

#include <chrono>
#include <cstdio>
#include <memory>

#include "s2r/spectrum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int rings = argc > 1 ? std::atoi(argv[1]) : 12;
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: not available (serial twice)\n");
#endif
    std::printf("%-8s %-10s %-10s %-12s %-12s %-8s\n", "seed", "|R|", "ideals", "serial(ms)",
                "parallel(ms)", "speedup");

    double tot_serial = 0, tot_parallel = 0;
    for (int seed = 1; seed <= rings; ++seed) {
        auto t = std::make_shared<const s2r::TwoRing>(s2r::random_ring(seed));
        std::size_t n_ideals = 0;
        s2r::SpecSpace a, b;
        double ms_serial = time_ms([&] { a = s2r::enumerate_primes_serial(t); });
        double ms_parallel = time_ms([&] { b = s2r::enumerate_primes_parallel(t); });
        n_ideals = s2r::enumerate_ideals_serial(*t).size();
        if (a.primes.size() != b.primes.size()) {
            std::printf("seed %d: MISMATCH between serial and parallel kernels\n", seed);
            return 1;
        }
        for (std::size_t i = 0; i < a.primes.size(); ++i)
            if (!(a.primes[i] == b.primes[i])) {
                std::printf("seed %d: MISMATCH between serial and parallel kernels\n", seed);
                return 1;
            }
        long size = 1;
        for (int i = 0; i < t->ring().dim(); ++i) size *= t->ring().p();
        std::printf("%-8d %-10ld %-10zu %-12.2f %-12.2f %-8.2f\n", seed, size, n_ideals,
                    ms_serial, ms_parallel, ms_serial / (ms_parallel > 0 ? ms_parallel : 1));
        tot_serial += ms_serial;
        tot_parallel += ms_parallel;
    }
    std::printf("total    %-10s %-10s %-12.2f %-12.2f %-8.2f\n", "", "", tot_serial, tot_parallel,
                tot_serial / (tot_parallel > 0 ? tot_parallel : 1));
    return 0;
}
