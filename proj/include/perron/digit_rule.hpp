#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perron/rational.hpp"

namespace perron {

/// A finite digit prefix (c_1, ..., c_k). The empty word denotes (0,1].
using DigitWord = std::vector<Natural>;

enum class RuleKind { Luroth, Engel, EngelMod, Pierce, OppenheimAffine, Custom };

/// The sequence P = (phi_n) mapping a digit prefix to the numerator factor r_n.
///
/// Builtins:
///   Luroth           r_n = 1
///   Engel            r_0 = 1, r_n = c_n - 1
///   EngelMod/Pierce  r_0 = 1, r_n = c_n   (positive form: modified Engel,
///                                          alternating form: Pierce)
///   OppenheimAffine  r_0 = 1, r_n = a*c_n + b
///
/// A custom rule must be pure and return r >= 1 on every valid prefix.
class DigitRule {
public:
    using CustomFn = std::function<Natural(std::span<const Natural>)>;

    static DigitRule luroth();
    static DigitRule engel();
    static DigitRule engel_mod();
    static DigitRule pierce();
    static DigitRule oppenheim(const Natural& a, const Natural& b);
    static DigitRule custom(std::string name, const Natural& phi0, CustomFn fn);

    RuleKind kind() const noexcept { return kind_; }
    const Natural& phi0() const noexcept { return phi0_; }
    const std::string& name() const noexcept { return name_; }

    /// r_k for a prefix of length k (r_0 = phi0). Does not check validity.
    Natural operator()(std::span<const Natural> prefix) const;

    /// r_k computed from the last digit alone; only meaningful when
    /// depends_on_last_digit_only().
    Natural from_last_digit(const Natural& last) const;

    bool depends_on_last_digit_only() const noexcept { return kind_ != RuleKind::Custom; }

private:
    DigitRule(RuleKind kind, std::string name, Natural phi0) : kind_(kind), name_(std::move(name)), phi0_(std::move(phi0)) {}

    RuleKind kind_;
    std::string name_;
    Natural phi0_;
    Natural a_{0}, b_{0};
    CustomFn custom_;
};

/// Parses "luroth", "engel", "engel-mod", "pierce" or "oppenheim:a,b".
DigitRule parse_rule(std::string_view text);

/// r_k for a valid prefix. Throws ValidityError naming the first offending index.
Natural rule_value(const DigitRule& rule, std::span<const Natural> prefix);

/// 1-based index of the first digit with c_i < r_{i-1} + 1, if any.
std::optional<std::size_t> first_invalid_index(const DigitRule& rule, std::span<const Natural> word);

/// Throws ValidityError if any digit violates c_i >= r_{i-1} + 1.
void validate_word(const DigitRule& rule, std::span<const Natural> word);

/// Comma-separated naturals, e.g. "3,9,9". Empty text is the empty word.
DigitWord parse_word(std::string_view text);
std::string format_word(std::span<const Natural> word);

/// Convenience for tests and literals.
DigitWord make_word(std::initializer_list<unsigned long> digits);

}  // namespace perron
