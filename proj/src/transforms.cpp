#include "perron/transforms.hpp"

#include "perron/errors.hpp"

namespace perron {

Transform Transform::fp(DigitRule rule) {
    DigitRule copy = rule;
    return Transform(TransformKind::FP, std::move(rule), Sign::Positive, std::move(copy), Sign::Alternating);
}

Transform Transform::t_engel() {
    return Transform(TransformKind::TEngel, DigitRule::engel(), Sign::Positive, DigitRule::engel_mod(), Sign::Positive);
}

Transform Transform::g_pierce() {
    return Transform(TransformKind::GPierce, DigitRule::pierce(), Sign::Alternating, DigitRule::pierce(),
                     Sign::Alternating);
}

ISPointError::ISPointError(std::size_t rank, DigitWord digits)
    : std::runtime_error("point is a cylinder endpoint; digits terminate at rank " + std::to_string(rank)),
      rank_(rank),
      digits_(std::move(digits)) {}

namespace {

DigitWord shift(const Transform& t, const DigitWord& word, bool forward) {
    DigitWord out = word;
    for (std::size_t n = 0; n < out.size(); ++n) {
        // T adds n-1 at (1-based) position n, G adds one everywhere.
        unsigned long step = t.kind() == TransformKind::TEngel ? n : 1;
        if (forward)
            out[n] += step;
        else
            out[n] -= step;
    }
    return out;
}

}  // namespace

DigitWord transform_digits(const Transform& t, const DigitWord& word, Direction dir) {
    const bool forward = dir == Direction::Forward;
    validate_word(forward ? t.source_rule() : t.target_rule(), word);
    if (t.kind() == TransformKind::FP) return word;
    DigitWord out = shift(t, word, forward);
    // Forward images are valid by construction; inverses of words outside
    // the range fail here.
    validate_word(forward ? t.target_rule() : t.source_rule(), out);
    return out;
}

CylinderInterval transform_point(const Transform& t, const Rational& x, std::size_t rank, Direction dir) {
    if (rank == 0) throw DomainError("transform_point needs rank >= 1");
    const bool forward = dir == Direction::Forward;
    const DigitRule& from_rule = forward ? t.source_rule() : t.target_rule();
    const Sign from_sign = forward ? t.source_sign() : t.target_sign();

    DigitWord digits;
    if (from_sign == Sign::Positive) {
        digits = positive_digits(from_rule, x, rank);
    } else {
        auto e = alternating_digits(from_rule, x, rank);
        if (e.is_point()) throw ISPointError(*e.is_point_rank, e.digits);
        digits = std::move(e.digits);
    }
    DigitWord image = transform_digits(t, digits, dir);
    return cylinder(forward ? t.target_rule() : t.source_rule(), image, forward ? t.target_sign() : t.source_sign());
}

Rational t_ratio(const DigitWord& engel_word) {
    static const Transform t = Transform::t_engel();
    DigitWord image = transform_digits(t, engel_word);
    return cylinder_diameter(DigitRule::engel_mod(), image) / cylinder_diameter(DigitRule::engel(), engel_word);
}

}  // namespace perron
