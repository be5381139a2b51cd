#include <cmath>

#include "perron/kernels.hpp"

namespace perron {

void CompensatedSum::add(double x) noexcept {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

namespace serial {

double power_sum(std::span<const double> log_d, double s) {
    CompensatedSum acc;
    for (double ld : log_d) acc += std::exp(s * ld);
    return acc.value();
}

}  // namespace serial
}  // namespace perron
