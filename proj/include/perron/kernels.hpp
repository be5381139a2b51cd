#pragma once

#include <cstddef>
#include <span>

namespace perron {

/// Neumaier (improved Kahan) summation.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + comp_; }
    CompensatedSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Fixed partition width for the parallel kernels. Partition boundaries
/// depend only on the input length, never on the thread count, so results
/// are reproducible bit-for-bit under any PERRON_THREADS setting.
inline constexpr std::size_t kChunk = 4096;

namespace serial {

/// sum_i exp(s * log_d[i]), one compensated pass in index order.
double power_sum(std::span<const double> log_d, double s);

}  // namespace serial

namespace parallel {

/// OpenMP version of serial::power_sum: compensated per-chunk partials,
/// combined in chunk order.
double power_sum(std::span<const double> log_d, double s);

/// Upper bound on threads used by the parallel kernels; 0 = OpenMP default.
void set_max_threads(int n);
int max_threads();

}  // namespace parallel

}  // namespace perron
