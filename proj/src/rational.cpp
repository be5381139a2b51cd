#include "perron/rational.hpp"

#include <cmath>

#include "perron/errors.hpp"

namespace perron {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Natural parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw DomainError("malformed integer '" + std::string(s) + "'");
    return Natural(std::string(s.front() == '+' ? s.substr(1) : s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Natural num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw DomainError("malformed rational '" + std::string(text) + "'");
    Natural den(std::string(den_text), 10);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Natural parse_natural(std::string_view text) {
    if (!all_digits(text)) throw DomainError("malformed natural '" + std::string(text) + "'");
    return Natural(std::string(text), 10);
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Natural& n) { return n.get_str(); }

Natural floor(const Rational& q) {
    Natural out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

double log(const Natural& n) {
    if (sgn(n) <= 0) throw DomainError("log of a non-positive integer");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double log(const Rational& q) {
    if (sgn(q) <= 0) throw DomainError("log of a non-positive rational");
    return log(Natural(q.get_num())) - log(Natural(q.get_den()));
}

double pow(const Rational& q, double alpha) {
    if (sgn(q) == 0) return 0.0;
    return std::exp(alpha * log(q));
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace perron
