#pragma once

#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "perron/digit_rule.hpp"
#include "perron/rational.hpp"

namespace perron {

enum class Compatibility { Compatible, Incompatible };

/// Hereditary digit-word filter: once a word is incompatible, so is every
/// extension of it. Implementations only judge the newest digit, assuming
/// the proper prefix already passed; `classify` replays all prefixes.
class DigitPredicate {
public:
    /// Judges word.back() given that word[0..k-2] is compatible.
    using StepFn = std::function<bool(std::span<const Natural> word)>;

    DigitPredicate(std::string description, StepFn step) : description_(std::move(description)), step_(std::move(step)) {}

    static DigitPredicate all();
    /// Every digit is in `allowed`.
    static DigitPredicate alphabet(std::set<Natural> allowed);
    /// p_{n+1} / p_n <= k for every consecutive pair.
    static DigitPredicate bounded_ratio(const Rational& k);
    /// p_n >= psi(n) for every n (1-based).
    static DigitPredicate growth_floor(std::string description, std::function<Rational(std::size_t)> psi);
    /// |log p_{n+1} / log p_n - alpha| <= delta for every consecutive pair;
    /// a prefix relaxation of the set where that ratio tends to alpha.
    static DigitPredicate ratio_limit_window(double alpha, double delta);

    bool step(std::span<const Natural> word) const { return word.empty() || step_(word); }
    Compatibility classify(std::span<const Natural> word) const;

    const std::string& description() const noexcept { return description_; }

private:
    std::string description_;
    StepFn step_;
};

/// "all", "alphabet:2,3", "ratio:k", "growth:pow:c,e" (psi(n) = c*n^e),
/// "growth:exp:b" (psi(n) = b^n), "window:alpha,delta".
DigitPredicate parse_predicate(std::string_view text);

}  // namespace perron
