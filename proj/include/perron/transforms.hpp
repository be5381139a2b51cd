#pragma once

#include <cstddef>
#include <stdexcept>

#include "perron/digit_rule.hpp"
#include "perron/expansion.hpp"

namespace perron {

enum class TransformKind {
    FP,       ///< positive -> alternating expansion of the same rule, digits kept
    TEngel,   ///< classical Engel -> modified Engel, c'_n = c_n + n - 1
    GPierce,  ///< Pierce (Perron notation) digit shift, c'_n = c_n + 1
};

enum class Direction { Forward, Inverse };

/// A digit transformation together with its source and target expansions.
class Transform {
public:
    static Transform fp(DigitRule rule);
    static Transform t_engel();
    static Transform g_pierce();

    TransformKind kind() const noexcept { return kind_; }
    const DigitRule& source_rule() const noexcept { return source_; }
    const DigitRule& target_rule() const noexcept { return target_; }
    Sign source_sign() const noexcept { return source_sign_; }
    Sign target_sign() const noexcept { return target_sign_; }

private:
    Transform(TransformKind kind, DigitRule source, Sign ss, DigitRule target, Sign ts)
        : kind_(kind), source_(std::move(source)), target_(std::move(target)), source_sign_(ss), target_sign_(ts) {}

    TransformKind kind_;
    DigitRule source_;
    DigitRule target_;
    Sign source_sign_;
    Sign target_sign_;
};

/// Raised when the source digits of a point terminate before the requested
/// rank (the point is an alternating cylinder endpoint).
class ISPointError : public std::runtime_error {
public:
    ISPointError(std::size_t rank, DigitWord digits);

    std::size_t rank() const noexcept { return rank_; }
    const DigitWord& digits() const noexcept { return digits_; }

private:
    std::size_t rank_;
    DigitWord digits_;
};

/// Maps a source-valid word to the target word (Forward), or a word in the
/// transform's range back to its source (Inverse). Throws ValidityError when
/// the input is not valid for the side it is read on, or lies outside the
/// range of the map.
DigitWord transform_digits(const Transform& t, const DigitWord& word, Direction dir = Direction::Forward);

/// Rank-`rank` cylinder (of the image side) containing the image of x. The
/// image of a rational is generally irrational, so a bracket is returned.
CylinderInterval transform_point(const Transform& t, const Rational& x, std::size_t rank,
                                 Direction dir = Direction::Forward);

/// |modified Engel cylinder of T(word)| / |Engel cylinder of word|, in (0, 2).
Rational t_ratio(const DigitWord& engel_word);

}  // namespace perron
