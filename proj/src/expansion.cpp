#include "perron/expansion.hpp"

#include "perron/errors.hpp"

namespace perron {

std::string_view to_string(Sign sign) { return sign == Sign::Positive ? "P" : "P-"; }

Sign parse_sign(std::string_view text) {
    if (text == "P" || text == "positive") return Sign::Positive;
    if (text == "P-" || text == "alternating") return Sign::Alternating;
    throw DomainError("unknown sign '" + std::string(text) + "' (expected P or P-)");
}

CylinderChart child_chart(const CylinderChart& parent, const Natural& c, const Natural& child_r, Sign sign) {
    Rational step(parent.r, Natural((c - 1) * c));
    step.canonicalize();
    CylinderChart out;
    if (sign == Sign::Positive) {
        Rational start(parent.r, c);
        start.canonicalize();
        out.offset = parent.offset + parent.slope * start;
        out.slope = parent.slope * step;
    } else {
        Rational start(parent.r, Natural(c - 1));
        start.canonicalize();
        out.offset = parent.offset + parent.slope * start;
        out.slope = -(parent.slope * step);
    }
    out.r = child_r;
    return out;
}

CylinderChart chart(const DigitRule& rule, const DigitWord& word, Sign sign) {
    validate_word(rule, word);
    CylinderChart ch;
    ch.r = rule.phi0();
    std::span<const Natural> all(word);
    for (std::size_t i = 0; i < word.size(); ++i) ch = child_chart(ch, word[i], rule(all.first(i + 1)), sign);
    return ch;
}

DigitWord positive_digits(const DigitRule& rule, const Rational& x0, std::size_t n) {
    if (x0 <= 0 || x0 > 1) throw DomainError("positive expansion needs 0 < x <= 1, got " + to_string(x0));
    DigitWord digits;
    digits.reserve(n);
    Rational x = x0;
    Natural r = rule.phi0();
    for (std::size_t k = 0; k < n; ++k) {
        Natural p = floor(Rational(r) / x) + 1;
        Rational rp(r, p);
        rp.canonicalize();
        x = (x - rp) * Rational(Natural((p - 1) * p), r);
        x.canonicalize();
        digits.push_back(p);
        r = rule(digits);
    }
    return digits;
}

AlternatingExpansion alternating_digits(const DigitRule& rule, const Rational& x0, std::size_t n) {
    if (x0 <= 0 || x0 >= 1) throw DomainError("alternating expansion needs 0 < x < 1, got " + to_string(x0));
    AlternatingExpansion out;
    Rational x = x0;
    Natural r = rule.phi0();
    for (std::size_t k = 0; k < n; ++k) {
        Rational ratio = Rational(r) / x;
        if (is_integer(ratio)) {
            out.is_point_rank = k + 1;
            return out;
        }
        Natural q = floor(ratio) + 1;
        Rational head(r, Natural(q - 1));
        head.canonicalize();
        x = (head - x) * Rational(Natural((q - 1) * q), r);
        x.canonicalize();
        out.digits.push_back(q);
        r = rule(out.digits);
    }
    return out;
}

Rational partial_sum(const DigitRule& rule, const DigitWord& word, Sign sign) {
    if (word.empty()) throw DomainError("partial_sum needs a nonempty word");
    validate_word(rule, word);
    std::span<const Natural> all(word);
    Rational sum = 0;
    Natural numer = rule.phi0();  // r_0 ... r_n
    Natural denom = 1;            // (c_1-1)c_1 ... (c_n-1)c_n
    for (std::size_t n = 0; n < word.size(); ++n) {
        const Natural& next = word[n];
        Natural last = sign == Sign::Positive ? next : Natural(next - 1);
        Rational term(numer, Natural(denom * last));
        term.canonicalize();
        if (sign == Sign::Alternating && n % 2 == 1)
            sum -= term;
        else
            sum += term;
        denom *= (next - 1) * next;
        numer *= rule(all.first(n + 1));
    }
    return sum;
}

Rational cylinder_diameter(const DigitRule& rule, const DigitWord& word) {
    validate_word(rule, word);
    std::span<const Natural> all(word);
    Natural numer = 1, denom = 1;
    for (std::size_t i = 0; i < word.size(); ++i) {
        numer *= rule(all.first(i));
        denom *= (word[i] - 1) * word[i];
    }
    Rational d(numer, denom);
    d.canonicalize();
    return d;
}

CylinderInterval cylinder(const DigitRule& rule, const DigitWord& word, Sign sign) {
    if (word.empty()) throw DomainError("cylinder needs a nonempty word");
    CylinderChart ch = chart(rule, word, sign);
    Rational a = ch.to_global(0), b = ch.to_global(1);
    CylinderInterval out;
    out.lo = a < b ? a : b;
    out.hi = a < b ? b : a;
    out.sign = sign;
    out.lo_included = false;
    out.hi_included = sign == Sign::Positive;
    out.word = word;
    return out;
}

DigitWord pierce_notation_convert(const DigitWord& word, PierceNotation direction) {
    // Perron notation: strictly increasing, first digit >= 2.
    // Traditional notation: strictly increasing, first digit >= 1.
    auto check = [](const DigitWord& w, const Natural& min_first, const char* notation) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Natural& bound = i == 0 ? min_first : Natural(w[i - 1] + 1);
            if (w[i] < bound)
                throw ValidityError(i + 1, std::string("not a valid ") + notation + " Pierce word at index " +
                                               std::to_string(i + 1));
        }
    };
    DigitWord out = word;
    if (direction == PierceNotation::PerronToTraditional) {
        check(word, 2, "Perron-notation");
        for (auto& d : out) d -= 1;
        check(out, 1, "traditional");
    } else {
        check(word, 1, "traditional");
        for (auto& d : out) d += 1;
        check(out, 2, "Perron-notation");
    }
    return out;
}

DigitWord traditional_pierce_digits(const Rational& x0) {
    if (x0 <= 0 || x0 >= 1) throw DomainError("Pierce expansion needs 0 < x < 1, got " + to_string(x0));
    DigitWord out;
    Rational x = x0;
    while (sgn(x) != 0) {
        Natural a = floor(1 / x);
        out.push_back(a);
        x = 1 - a * x;
    }
    return out;
}

}  // namespace perron
