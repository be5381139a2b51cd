#include "perron/dimension.hpp"

#include <omp.h>

#include <cmath>

#include "perron/errors.hpp"
#include "perron/kernels.hpp"

namespace perron {

namespace {

void check_args(const DigitRule& rule, std::size_t rank, const Natural& cap) {
    if (rank == 0) throw DomainError("rank must be >= 1");
    if (cap < rule.phi0() + 1) throw DomainError("digit cap " + cap.get_str() + " admits no first digit");
}

// Depth-first walk below `word` down to `rank`, carrying the signed slope of
// the cylinder chart so that each node costs one multiplication.
// `on_leaf(word, slope)`.
template <class Leaf>
void walk(const DigitRule& rule, Sign sign, const DigitPredicate& pred, std::size_t rank, const Natural& cap,
          DigitWord& word, const Natural& r, const Rational& slope, bool& cap_too_small, Leaf& on_leaf) {
    if (word.size() == rank) {
        on_leaf(word, slope);
        return;
    }
    if (r + 1 > cap) {
        cap_too_small = true;
        return;
    }
    for (Natural c = r + 1; c <= cap; ++c) {
        word.push_back(c);
        if (pred.step(word)) {
            Rational step(r, Natural((c - 1) * c));
            step.canonicalize();
            Rational child_slope = sign == Sign::Alternating ? Rational(-slope * step) : Rational(slope * step);
            Natural child_r = word.size() < rank ? rule(word) : Natural(0);
            walk(rule, sign, pred, rank, cap, word, child_r, child_slope, cap_too_small, on_leaf);
        }
        word.pop_back();
    }
}

}  // namespace

bool for_each_compatible_base(const DigitRule& rule, const DigitPredicate& pred, std::size_t rank, const Natural& cap,
                              const std::function<void(const DigitWord&)>& visit) {
    check_args(rule, rank, cap);
    DigitWord word;
    bool cap_too_small = false;
    auto leaf = [&](const DigitWord& w, const Rational&) { visit(w); };
    walk(rule, Sign::Positive, pred, rank, cap, word, rule.phi0(), Rational(1), cap_too_small, leaf);
    return cap_too_small;
}

std::vector<DigitWord> enumerate_compatible_bases(const DigitRule& rule, const DigitPredicate& pred, std::size_t rank,
                                                  const Natural& cap) {
    std::vector<DigitWord> out;
    for_each_compatible_base(rule, pred, rank, cap, [&](const DigitWord& w) { out.push_back(w); });
    return out;
}

BaseDiameters compatible_diameters(const DigitRule& rule, Sign sign, const DigitPredicate& pred, std::size_t rank,
                                   const Natural& cap, Kernel kernel) {
    check_args(rule, rank, cap);
    BaseDiameters out;

    auto run_subtree = [&](DigitWord& word, const Natural& r, const Rational& slope, std::vector<Rational>& sink,
                           bool& too_small) {
        auto leaf = [&](const DigitWord&, const Rational& s) { sink.push_back(abs(s)); };
        walk(rule, sign, pred, rank, cap, word, r, slope, too_small, leaf);
    };

    if (kernel == Kernel::Serial) {
        DigitWord word;
        run_subtree(word, rule.phi0(), Rational(1), out.diameters, out.cap_too_small);
        return out;
    }

    // One partition per leading digit; partitions are joined in digit order.
    const Natural first = rule.phi0() + 1;
    const long count = Natural(cap - first + 1).get_si();
    std::vector<std::vector<Rational>> parts(count);
    std::vector<char> too_small(count, 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallel::max_threads())
    for (long i = 0; i < count; ++i) {
        DigitWord word{Natural(first + i)};
        if (!pred.step(word)) continue;
        Rational step(rule.phi0(), Natural((word[0] - 1) * word[0]));
        step.canonicalize();
        Natural r = rank > 1 ? rule(word) : Natural(0);
        bool flag = false;
        run_subtree(word, r, step, parts[i], flag);
        too_small[i] = flag;
    }
    for (long i = 0; i < count; ++i) {
        out.diameters.insert(out.diameters.end(), std::make_move_iterator(parts[i].begin()),
                             std::make_move_iterator(parts[i].end()));
        out.cap_too_small = out.cap_too_small || too_small[i];
    }
    return out;
}

DimensionEstimate pressure_root(const DigitRule& rule, Sign sign, const DigitPredicate& pred, std::size_t rank,
                                const Natural& cap, double tol, Kernel kernel) {
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    BaseDiameters bases = compatible_diameters(rule, sign, pred, rank, cap, kernel);

    DimensionEstimate est;
    est.rank = rank;
    est.digit_cap = cap;
    est.bases_count = bases.diameters.size();
    est.cap_too_small = bases.cap_too_small;
    if (bases.diameters.size() <= 1) return est;  // s = 0 solves it (or nothing to solve)

    std::vector<double> log_d(bases.diameters.size());
    for (std::size_t i = 0; i < log_d.size(); ++i) log_d[i] = perron::log(bases.diameters[i]);

    auto excess = [&](double s) {
        return (kernel == Kernel::Serial ? serial::power_sum(log_d, s) : parallel::power_sum(log_d, s)) - 1.0;
    };

    // The sum is strictly decreasing in s, at least 1 at s = 0 and below 1 at
    // s = 1.5 (disjoint cylinders have total length <= 1, each shorter than 1).
    double lo = 0.0, hi = 1.5;
    double mid = 0.75, f = excess(mid);
    for (int iter = 0; iter < 2000 && std::fabs(f) > tol; ++iter) {
        if (f > 0)
            lo = mid;
        else
            hi = mid;
        double next = 0.5 * (lo + hi);
        if (next == lo || next == hi) break;
        mid = next;
        f = excess(mid);
    }
    est.s_value = mid;
    est.residual = std::fabs(f);
    return est;
}

double moran_dimension(std::span<const Rational> ratios, double tol) {
    if (ratios.empty()) throw DomainError("moran_dimension needs at least one ratio");
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    Rational total = 0;
    for (const auto& r : ratios) {
        if (r <= 0 || r >= 1) throw DomainError("ratio " + to_string(r) + " outside (0,1)");
        total += r;
    }
    if (total > 1) throw DomainError("ratios sum to " + to_string(total) + " > 1");

    auto excess = [&](double s) {
        CompensatedSum acc;
        for (const auto& r : ratios) acc += perron::pow(r, s);
        return acc.value() - 1.0;
    };
    if (std::fabs(excess(1.0)) <= tol) return 1.0;
    double lo = 0.0, hi = 1.0;
    double mid = 0.5, f = excess(mid);
    for (int iter = 0; iter < 2000 && std::fabs(f) > tol; ++iter) {
        if (f > 0)
            lo = mid;
        else
            hi = mid;
        double next = 0.5 * (lo + hi);
        if (next == lo || next == hi) break;
        mid = next;
        f = excess(mid);
    }
    return mid;
}

Rational measure_at_rank(const DigitRule& rule, Sign sign, const DigitPredicate& pred, std::size_t rank,
                         const Natural& cap, Kernel kernel) {
    BaseDiameters bases = compatible_diameters(rule, sign, pred, rank, cap, kernel);
    Rational total = 0;
    for (const auto& d : bases.diameters) total += d;
    return total;
}

}  // namespace perron
