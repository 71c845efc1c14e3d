// Compares the word/OpenMP-parallel dense kernels against the serial
// reference implementations kept for testing.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dyntc/kernels.hpp"

using namespace dyntc;
using clock_type = std::chrono::steady_clock;

namespace {

BoolMatrix random_matrix(int n, double density, std::mt19937_64& rng) {
    BoolMatrix m(n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (u(rng) < density) m.set(x, y);
    return m;
}

template <typename F>
double time_ms(F&& f, int reps) {
    auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) f();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes{64, 128, 256, 512};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::stoi(argv[i]));
    }
#ifdef _OPENMP
    printf("openmp threads: %d\n", omp_get_max_threads());
#else
    printf("openmp: off\n");
#endif
    printf("%-18s %6s %12s %12s %9s\n", "kernel", "n", "serial_ms", "parallel_ms", "speedup");
    std::mt19937_64 rng(12345);
    for (int n : sizes) {
        BoolMatrix a = random_matrix(n, 0.1, rng);
        BoolMatrix b = random_matrix(n, 0.1, rng);
        const int reps = n <= 128 ? 5 : 2;

        BoolMatrix ref = serial::bool_mul(a, b);
        if (bool_mul(a, b) != ref) {
            printf("bool_mul mismatch at n=%d\n", n);
            return 1;
        }
        double s = time_ms([&] { (void)serial::bool_mul(a, b); }, reps);
        double p = time_ms([&] { (void)bool_mul(a, b); }, reps);
        printf("%-18s %6d %12.3f %12.3f %8.1fx\n", "bool_mul", n, s, p, s / p);

        if (closure_oracle(a) != serial::closure(a)) {
            printf("closure mismatch at n=%d\n", n);
            return 1;
        }
        s = time_ms([&] { (void)serial::closure(a); }, reps);
        p = time_ms([&] { (void)closure_oracle(a); }, reps);
        printf("%-18s %6d %12.3f %12.3f %8.1fx\n", "closure", n, s, p, s / p);

        if (!(int_product(a, b) == serial::int_product(a, b))) {
            printf("int_product mismatch at n=%d\n", n);
            return 1;
        }
        s = time_ms([&] { (void)serial::int_product(a, b); }, reps);
        p = time_ms([&] { (void)int_product(a, b); }, reps);
        printf("%-18s %6d %12.3f %12.3f %8.1fx\n", "int_product", n, s, p, s / p);
    }
    return 0;
}
