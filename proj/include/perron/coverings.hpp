#pragma once

#include <optional>
#include <vector>

#include "perron/digit_rule.hpp"
#include "perron/expansion.hpp"
#include "perron/rational.hpp"

namespace perron {

/// A union of consecutive same-rank cylinders inside one cylinder of the
/// previous rank: children start..end of `prefix` (end unset = unbounded).
/// Bounded sets belong to the finite family, all of them to the full family.
struct FamilySet {
    Sign sign = Sign::Positive;
    DigitWord prefix;
    Natural start;
    std::optional<Natural> end;

    bool bounded() const { return end.has_value(); }
    bool operator==(const FamilySet&) const = default;
};

/// Interval with exact endpoints; (lo, hi] by default.
struct QInterval {
    Rational lo;
    Rational hi;
    bool lo_included = false;
    bool hi_included = true;

    Rational width() const { return hi - lo; }
};

void validate_family_set(const DigitRule& rule, const FamilySet& fs);

/// r_0...r_k / ((c_1-1)c_1 ... (c_k-1)c_k) for the prefix c_1..c_k: child i
/// of the prefix has diameter factor / ((i-1)i).
Rational prefix_factor(const DigitRule& rule, const DigitWord& prefix);

/// Telescoped diameter: factor*(1/(start-1) - 1/end), or factor/(start-1)
/// when unbounded.
Rational family_set_diameter(const DigitRule& rule, const FamilySet& fs);

/// Exact interval hull; positive sets are (lo, hi], alternating ones open.
QInterval family_set_hull(const DigitRule& rule, const FamilySet& fs);

enum class BoundarySide {
    FromInf,  ///< cover (inf cylinder, cut]
    ToSup,    ///< cover (cut, sup cylinder]
};

/// Both covers of a one-sided piece of a cylinder. `tight` has at most two
/// sets, each no wider than the piece; `single` is one set at most twice as
/// wide. `exact` is set when `single` equals the piece.
struct BoundaryCover {
    std::vector<FamilySet> tight;
    FamilySet single;
    bool exact = false;
};

/// Covers the part of cylinder `prefix` between its infimum and `cut`
/// (FromInf) or between `cut` and its supremum (ToSup).
/// FromInf needs cut in (inf, sup]; ToSup needs cut in [inf, sup).
BoundaryCover cover_boundary(const DigitRule& rule, Sign sign, const DigitWord& prefix, const Rational& cut,
                             BoundarySide side);

/// At most three family sets, each of diameter <= |U|, whose union contains
/// U (positive: (x1, x2] with 0 <= x1 < x2 <= 1; alternating: (x1, x2)
/// up to cylinder endpoints).
std::vector<FamilySet> cover_interval(const DigitRule& rule, Sign sign, const QInterval& u);

/// Splits an unbounded family set into the finite blocks M_j = children
/// t_j..t_{j+1}-1 with t_1 = start and t_{j+1} the least index whose tail is
/// shorter than 1/(s+1) of the tail at t_j. `s` is the least integer with
/// sum_{j>=1} s^{-j*alpha} = 1/(s^alpha - 1) < eps.
///
/// Single consumer. Every block satisfies |M_{j+1}| < |M_j| / s, so
///     sum_j |M_j|^alpha < |M|^alpha (1 + eps).
class FiniteSplit {
public:
    FiniteSplit(const DigitRule& rule, FamilySet fs, double alpha, double eps);

    const Natural& s() const noexcept { return s_; }
    double alpha() const noexcept { return alpha_; }
    double eps() const noexcept { return eps_; }

    /// Next block and its exact diameter.
    FamilySet next();
    const Rational& last_diameter() const noexcept { return last_diameter_; }

    /// Exact diameter of the part not yet emitted.
    Rational remaining_diameter() const;

    /// Upper bound on the alpha-cost of all blocks after the last emitted
    /// one: |M_J|^alpha / (s^alpha - 1).
    double residue_bound() const;

    std::size_t emitted() const noexcept { return emitted_; }

private:
    FamilySet fs_;
    Rational factor_;
    Natural s_;
    Natural t_;  // start of the next block
    double alpha_;
    double eps_;
    Rational last_diameter_{0};
    std::size_t emitted_ = 0;
};

/// Least s >= 2 with 1/(s^alpha - 1) < eps.
Natural split_ratio(double alpha, double eps);

/// Convenience: the first `count` blocks.
std::vector<FamilySet> split_to_finite(const DigitRule& rule, const FamilySet& fs, double alpha, double eps,
                                       std::size_t count);

struct CoverReport {
    bool covers = false;
    Rational max_diameter{0};
    double cost = 0.0;  ///< sum |M|^alpha, compensated summation of doubles
};

/// Checks U against the union of the set hulls exactly. Sets must share a
/// sign; for alternating sets the hull endpoints (cylinder endpoints) are
/// exempt. The alpha-cost uses exact diameters and double arithmetic.
CoverReport verify_cover(const DigitRule& rule, const QInterval& u, const std::vector<FamilySet>& sets, double alpha);

}  // namespace perron
