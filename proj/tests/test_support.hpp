#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "perron/digit_rule.hpp"
#include "perron/expansion.hpp"
#include "perron/rational.hpp"

namespace perron::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline std::vector<DigitRule> builtin_rules() {
    return {DigitRule::luroth(), DigitRule::engel(), DigitRule::engel_mod(), DigitRule::pierce(),
            DigitRule::oppenheim(2, -1)};
}

/// Uniform p/q in (0,1] with q <= max_den.
inline Rational random_unit_rational(std::mt19937_64& rng, std::uint64_t max_den) {
    std::uniform_int_distribution<std::uint64_t> den_dist(1, max_den);
    std::uint64_t den = den_dist(rng);
    std::uniform_int_distribution<std::uint64_t> num_dist(1, den);
    Rational x(Natural(std::to_string(num_dist(rng))), Natural(std::to_string(den)));
    x.canonicalize();
    return x;
}

/// Random valid word: each digit is r + 1 + geometric-ish offset.
inline DigitWord random_word(const DigitRule& rule, std::mt19937_64& rng, std::size_t len, unsigned spread = 6) {
    std::geometric_distribution<unsigned> extra(1.0 / spread);
    DigitWord w;
    for (std::size_t i = 0; i < len; ++i) {
        Natural r = rule(w);
        w.push_back(r + 1 + extra(rng));
    }
    return w;
}

/// Independent series evaluation (no charts): the first k terms plus
/// the tail supremum/infimum given by the cylinder diameter.
inline Rational series_value(const DigitRule& rule, const DigitWord& w, Sign sign) {
    Rational s = 0;
    Natural num = rule.phi0(), den = 1;
    for (std::size_t n = 0; n < w.size(); ++n) {
        Natural last = sign == Sign::Positive ? w[n] : Natural(w[n] - 1);
        Rational term(num, Natural(den * last));
        term.canonicalize();
        if (sign == Sign::Alternating && (n % 2)) s -= term; else s += term;
        den *= (w[n] - 1) * w[n];
        num *= rule(std::span<const Natural>(w).first(n + 1));
    }
    return s;
}

}  // namespace perron::testing
