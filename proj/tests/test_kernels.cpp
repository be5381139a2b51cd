#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "perron/kernels.hpp"

using namespace perron;

TEST_CASE("compensated sum recovers cancelled low bits") {
    CompensatedSum acc;
    acc += 1e16;
    for (int i = 0; i < 1000; ++i) acc += 1.0;
    acc += -1e16;
    CHECK(acc.value() == 1000.0);
}

TEST_CASE("serial and parallel power sums agree across sizes and thread caps") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(-30.0, -0.01);
    for (std::size_t n : {0ul, 1ul, kChunk - 1, kChunk, 3 * kChunk + 17, 50000ul}) {
        std::vector<double> v(n);
        for (auto& x : v) x = dist(rng);
        for (double s : {0.0, 0.3, 1.0, 1.5}) {
            double ref = serial::power_sum(v, s);
            double first = 0;
            for (int threads : {1, 2, 4, 0}) {
                parallel::set_max_threads(threads);
                double par = parallel::power_sum(v, s);
                CHECK(std::fabs(par - ref) <= 1e-12 * std::max(1.0, ref));
                // chunking is fixed, so the thread count never changes the bits
                if (threads == 1) first = par;
                CHECK(par == first);
            }
            if (s == 0.0) CHECK(ref == static_cast<double>(n));
        }
    }
    parallel::set_max_threads(0);
}
