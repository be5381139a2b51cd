#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "perron/digit_rule.hpp"
#include "perron/rational.hpp"

namespace perron {

/// Positive (P) or alternating (P-) Perron expansion.
enum class Sign { Positive, Alternating };

std::string_view to_string(Sign sign);
Sign parse_sign(std::string_view text);  // "P" or "P-"

/// Exact endpoints of a P- or P^- cylinder.
///
/// Positive cylinders are (lo, hi]. Alternating cylinders are (lo, hi) minus
/// the countable set of alternating cylinder endpoints, which is never
/// materialized: both flags are simply false.
struct CylinderInterval {
    Rational lo;
    Rational hi;
    bool lo_included = false;
    bool hi_included = true;
    Sign sign = Sign::Positive;
    DigitWord word;

    Rational diameter() const { return hi - lo; }

    /// Interval membership with the openness flags; for alternating
    /// cylinders points of the excluded endpoint set are not detected here.
    bool contains(const Rational& x) const {
        bool above = lo_included ? x >= lo : x > lo;
        bool below = hi_included ? x <= hi : x < hi;
        return above && below;
    }
};

/// Affine chart of a cylinder: global = offset + slope * local, where the
/// local coordinate ranges over (0,1] (positive) or (0,1) (alternating) and
/// `r` is the rule value of the whole word. Alternating slopes change sign
/// at each rank.
struct CylinderChart {
    Rational offset{0};
    Rational slope{1};
    Natural r;

    Rational to_global(const Rational& local) const { return offset + slope * local; }
    Rational to_local(const Rational& global) const { return (global - offset) / slope; }
    bool increasing() const { return sgn(slope) > 0; }
};

/// Map of child digit `c` inside a cylinder whose rule value is `r`, in the
/// parent's local coordinate: positive y -> r/c + s*y, alternating
/// y -> r/(c-1) - s*y, where s = r/((c-1)c).
CylinderChart child_chart(const CylinderChart& parent, const Natural& c, const Natural& child_r, Sign sign);

CylinderChart chart(const DigitRule& rule, const DigitWord& word, Sign sign);

/// First n positive digits of x in (0,1].
///
/// With r the current rule value, the series factors as
///     x = r/p + r/((p-1)p) * x',
/// where x' in (0,1] is the value of the shifted series. Hence
///     p = floor(r/x) + 1,   x' = (x - r/p) * (p-1)p / r.
/// When r/x is an integer, x is the included supremum of cylinder p; this is
/// the (a,b] convention and gives the infinite expansion of rationals.
DigitWord positive_digits(const DigitRule& rule, const Rational& x, std::size_t n);

/// Result of alternating digit extraction. When the extraction meets an
/// integer r/x, x is a cylinder endpoint (no alternating representation) and
/// `is_point_rank` holds the rank at which that happened.
struct AlternatingExpansion {
    DigitWord digits;
    std::optional<std::size_t> is_point_rank;

    bool is_point() const { return is_point_rank.has_value(); }
};

/// First n alternating digits of x in (0,1).
///
///     x = r/(q-1) - r/((q-1)q) * x',   x' in (0,1)
///     q = floor(r/x) + 1,              x' = (r/(q-1) - x) * (q-1)q / r.
AlternatingExpansion alternating_digits(const DigitRule& rule, const Rational& x, std::size_t n);

/// Sum of the first k series terms of a nonempty valid word.
Rational partial_sum(const DigitRule& rule, const DigitWord& word, Sign sign);

/// r_0...r_{k-1} / ((c_1-1)c_1 ... (c_k-1)c_k), identical for both signs.
Rational cylinder_diameter(const DigitRule& rule, const DigitWord& word);

CylinderInterval cylinder(const DigitRule& rule, const DigitWord& word, Sign sign);

enum class PierceNotation { PerronToTraditional, TraditionalToPerron };

/// Perron-notation Pierce digits exceed the traditional ones by one.
DigitWord pierce_notation_convert(const DigitWord& word, PierceNotation direction);

/// Traditional (finite) Pierce digits of a rational x in (0,1):
/// a = floor(1/x), x <- 1 - a*x until the remainder vanishes.
DigitWord traditional_pierce_digits(const Rational& x);

}  // namespace perron
