#include <omp.h>

#include <atomic>
#include <cmath>
#include <vector>

#include "perron/kernels.hpp"

namespace perron::parallel {

namespace {

std::atomic<int> g_max_threads{0};

int thread_count() {
    int cap = g_max_threads.load();
    int def = omp_get_max_threads();
    return cap > 0 && cap < def ? cap : def;
}

template <class Term>
double chunked_sum(std::span<const double> log_d, Term term) {
    const std::size_t n = log_d.size();
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::size_t c = 0; c < chunks; ++c) {
        CompensatedSum acc;
        const std::size_t end = std::min(n, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) acc += term(log_d[i]);
        partial[c] = acc.value();
    }
    CompensatedSum total;
    for (double p : partial) total += p;
    return total.value();
}

}  // namespace

double power_sum(std::span<const double> log_d, double s) {
    return chunked_sum(log_d, [s](double ld) { return std::exp(s * ld); });
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() { return thread_count(); }

}  // namespace perron::parallel
