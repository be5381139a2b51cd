#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "perron/digit_rule.hpp"
#include "perron/expansion.hpp"
#include "perron/predicate.hpp"
#include "perron/rational.hpp"

namespace perron {

/// Which summation kernel backs the estimator. `Serial` is the reference
/// implementation kept for testing and benchmarking.
enum class Kernel { Serial, Parallel };

/// Rank-k approximant of the Hausdorff dimension of a digit-defined set.
struct DimensionEstimate {
    std::size_t rank = 0;
    Natural digit_cap;
    double s_value = 0.0;
    double residual = 0.0;  ///< |sum |cylinder|^s - 1|
    std::size_t bases_count = 0;
    bool cap_too_small = false;  ///< some compatible prefix had no digit <= cap
};

/// Visits every valid, compatible word of length `rank` with digits <= cap in
/// lexicographic order. Returns true when the cap excluded every child of
/// some compatible prefix. Rule values are evaluated once per prefix.
bool for_each_compatible_base(const DigitRule& rule, const DigitPredicate& pred, std::size_t rank,
                              const Natural& cap, const std::function<void(const DigitWord&)>& visit);

std::vector<DigitWord> enumerate_compatible_bases(const DigitRule& rule, const DigitPredicate& pred, std::size_t rank,
                                                  const Natural& cap);

/// Exact diameters of the compatible rank-k cylinders of the given sign,
/// in lexicographic base order. The parallel kernel partitions by leading
/// digit and concatenates partitions in digit order.
struct BaseDiameters {
    std::vector<Rational> diameters;
    bool cap_too_small = false;
};
BaseDiameters compatible_diameters(const DigitRule& rule, Sign sign, const DigitPredicate& pred, std::size_t rank,
                                   const Natural& cap, Kernel kernel = Kernel::Parallel);

/// Root s in [0, 1.5] of sum |cylinder|^s = 1 over the compatible bases, by
/// bisection until the residual is <= tol. No bases gives s = 0.
DimensionEstimate pressure_root(const DigitRule& rule, Sign sign, const DigitPredicate& pred, std::size_t rank,
                                const Natural& cap, double tol, Kernel kernel = Kernel::Parallel);

/// Root s in [0,1] of sum r_i^s = 1 for ratios in (0,1) with sum <= 1.
double moran_dimension(std::span<const Rational> ratios, double tol);

/// Exact sum of the compatible cylinder diameters at the rank.
Rational measure_at_rank(const DigitRule& rule, Sign sign, const DigitPredicate& pred, std::size_t rank,
                         const Natural& cap, Kernel kernel = Kernel::Parallel);

}  // namespace perron
