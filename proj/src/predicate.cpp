#include "perron/predicate.hpp"

#include <cmath>

#include "perron/errors.hpp"

namespace perron {

Compatibility DigitPredicate::classify(std::span<const Natural> word) const {
    for (std::size_t k = 1; k <= word.size(); ++k)
        if (!step(word.first(k))) return Compatibility::Incompatible;
    return Compatibility::Compatible;
}

DigitPredicate DigitPredicate::all() {
    return DigitPredicate("all", [](std::span<const Natural>) { return true; });
}

DigitPredicate DigitPredicate::alphabet(std::set<Natural> allowed) {
    std::string desc = "alphabet:";
    bool first = true;
    for (const auto& d : allowed) {
        desc += (first ? "" : ",") + d.get_str();
        first = false;
    }
    return DigitPredicate(std::move(desc), [allowed = std::move(allowed)](std::span<const Natural> w) {
        return allowed.count(w.back()) > 0;
    });
}

DigitPredicate DigitPredicate::bounded_ratio(const Rational& k) {
    if (k <= 0) throw DomainError("ratio bound must be positive");
    return DigitPredicate("ratio:" + to_string(k), [k](std::span<const Natural> w) {
        if (w.size() < 2) return true;
        return Rational(w.back()) <= k * w[w.size() - 2];
    });
}

DigitPredicate DigitPredicate::growth_floor(std::string description, std::function<Rational(std::size_t)> psi) {
    return DigitPredicate(std::move(description),
                          [psi = std::move(psi)](std::span<const Natural> w) { return Rational(w.back()) >= psi(w.size()); });
}

DigitPredicate DigitPredicate::ratio_limit_window(double alpha, double delta) {
    if (!(delta >= 0)) throw DomainError("window half-width must be non-negative");
    std::string desc = "window:" + std::to_string(alpha) + "," + std::to_string(delta);
    return DigitPredicate(std::move(desc), [alpha, delta](std::span<const Natural> w) {
        if (w.size() < 2) return true;
        double ratio = perron::log(w.back()) / perron::log(w[w.size() - 2]);
        return std::fabs(ratio - alpha) <= delta;
    });
}

namespace {

std::pair<std::string_view, std::string_view> split_once(std::string_view s, char sep) {
    auto pos = s.find(sep);
    if (pos == std::string_view::npos) return {s, {}};
    return {s.substr(0, pos), s.substr(pos + 1)};
}

double parse_real(std::string_view s) {
    std::string text(s);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError("malformed number '" + text + "'");
    }
    if (used != text.size()) throw DomainError("malformed number '" + text + "'");
    return v;
}

}  // namespace

DigitPredicate parse_predicate(std::string_view text) {
    auto [head, rest] = split_once(text, ':');
    if (head == "all" && rest.empty()) return DigitPredicate::all();
    if (head == "alphabet") {
        auto word = parse_word(rest);
        if (word.empty()) throw DomainError("alphabet needs at least one digit");
        return DigitPredicate::alphabet(std::set<Natural>(word.begin(), word.end()));
    }
    if (head == "ratio") return DigitPredicate::bounded_ratio(parse_rational(rest));
    if (head == "growth") {
        auto [form, args] = split_once(rest, ':');
        if (form == "pow") {
            auto [c_text, e_text] = split_once(args, ',');
            Rational c = parse_rational(c_text);
            unsigned long e = parse_natural(e_text).get_ui();
            return DigitPredicate::growth_floor(std::string(text), [c, e](std::size_t n) {
                Natural p;
                mpz_ui_pow_ui(p.get_mpz_t(), n, e);
                return Rational(c * p);
            });
        }
        if (form == "exp") {
            Rational b = parse_rational(args);
            return DigitPredicate::growth_floor(std::string(text), [b](std::size_t n) {
                Rational p = 1;
                for (std::size_t i = 0; i < n; ++i) p *= b;
                return p;
            });
        }
        throw DomainError("growth predicate needs 'growth:pow:c,e' or 'growth:exp:b'");
    }
    if (head == "window") {
        auto [a_text, d_text] = split_once(rest, ',');
        return DigitPredicate::ratio_limit_window(parse_real(a_text), parse_real(d_text));
    }
    throw DomainError("unknown predicate '" + std::string(text) + "'");
}

}  // namespace perron
