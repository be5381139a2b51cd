#include "perron/digit_rule.hpp"

#include "perron/errors.hpp"

namespace perron {

DigitRule DigitRule::luroth() { return DigitRule(RuleKind::Luroth, "luroth", 1); }
DigitRule DigitRule::engel() { return DigitRule(RuleKind::Engel, "engel", 1); }
DigitRule DigitRule::engel_mod() { return DigitRule(RuleKind::EngelMod, "engel-mod", 1); }
DigitRule DigitRule::pierce() { return DigitRule(RuleKind::Pierce, "pierce", 1); }

DigitRule DigitRule::oppenheim(const Natural& a, const Natural& b) {
    // Every digit is at least 2, so r >= 1 everywhere iff it holds at c = 2.
    if (sgn(a) < 0) throw DomainError("oppenheim: a must be a natural number");
    if (2 * a + b < 1) throw DomainError("oppenheim: a*c + b must be >= 1 for every digit c >= 2");
    DigitRule rule(RuleKind::OppenheimAffine, "oppenheim:" + a.get_str() + "," + b.get_str(), 1);
    rule.a_ = a;
    rule.b_ = b;
    return rule;
}

DigitRule DigitRule::custom(std::string name, const Natural& phi0, CustomFn fn) {
    if (phi0 < 1) throw DomainError("custom rule: phi0 must be >= 1");
    if (!fn) throw DomainError("custom rule: empty function");
    DigitRule rule(RuleKind::Custom, std::move(name), phi0);
    rule.custom_ = std::move(fn);
    return rule;
}

Natural DigitRule::from_last_digit(const Natural& last) const {
    switch (kind_) {
        case RuleKind::Luroth: return 1;
        case RuleKind::Engel: return last - 1;
        case RuleKind::EngelMod:
        case RuleKind::Pierce: return last;
        case RuleKind::OppenheimAffine: return a_ * last + b_;
        case RuleKind::Custom: break;
    }
    throw std::logic_error("from_last_digit on a prefix-dependent rule");
}

Natural DigitRule::operator()(std::span<const Natural> prefix) const {
    if (prefix.empty()) return phi0_;
    if (kind_ != RuleKind::Custom) return from_last_digit(prefix.back());
    Natural r = custom_(prefix);
    if (r < 1) throw DomainError("custom rule '" + name_ + "' returned r < 1");
    return r;
}

DigitRule parse_rule(std::string_view text) {
    if (text == "luroth") return DigitRule::luroth();
    if (text == "engel") return DigitRule::engel();
    if (text == "engel-mod") return DigitRule::engel_mod();
    if (text == "pierce") return DigitRule::pierce();
    constexpr std::string_view opp = "oppenheim:";
    if (text.substr(0, opp.size()) == opp) {
        auto args = text.substr(opp.size());
        auto comma = args.find(',');
        if (comma == std::string_view::npos) throw DomainError("oppenheim rule needs 'oppenheim:a,b'");
        Natural a = parse_natural(args.substr(0, comma));
        Natural b = floor(parse_rational(args.substr(comma + 1)));
        if (parse_rational(args.substr(comma + 1)) != Rational(b))
            throw DomainError("oppenheim: b must be an integer");
        return DigitRule::oppenheim(a, b);
    }
    throw DomainError("unknown system '" + std::string(text) + "'");
}

std::optional<std::size_t> first_invalid_index(const DigitRule& rule, std::span<const Natural> word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        Natural r = rule(word.first(i));
        if (word[i] < r + 1) return i + 1;
    }
    return std::nullopt;
}

void validate_word(const DigitRule& rule, std::span<const Natural> word) {
    if (auto bad = first_invalid_index(rule, word)) {
        Natural r = rule(word.first(*bad - 1));
        throw ValidityError(*bad, "digit " + word[*bad - 1].get_str() + " at index " + std::to_string(*bad) +
                                      " violates c >= r + 1 = " + Natural(r + 1).get_str() + " under " + rule.name());
    }
}

Natural rule_value(const DigitRule& rule, std::span<const Natural> prefix) {
    validate_word(rule, prefix);
    return rule(prefix);
}

DigitWord parse_word(std::string_view text) {
    DigitWord out;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        out.push_back(parse_natural(item));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (text.empty()) throw DomainError("trailing comma in digit word");
    }
    return out;
}

std::string format_word(std::span<const Natural> word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += word[i].get_str();
    }
    return out;
}

DigitWord make_word(std::initializer_list<unsigned long> digits) {
    DigitWord out;
    out.reserve(digits.size());
    for (auto d : digits) out.emplace_back(d);
    return out;
}

}  // namespace perron
