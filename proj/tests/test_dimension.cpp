#include <doctest.h>

#include <cmath>

#include "perron/dimension.hpp"
#include "perron/errors.hpp"
#include "test_support.hpp"

using namespace perron;
using perron::testing::q;

namespace {

// Independent Moran root by plain bisection in long double.
double moran_oracle(const std::vector<double>& ratios) {
    long double lo = 0, hi = 1;
    for (int i = 0; i < 200; ++i) {
        long double mid = (lo + hi) / 2, sum = 0;
        for (double r : ratios) sum += std::pow(static_cast<long double>(r), mid);
        (sum > 1 ? lo : hi) = mid;
    }
    return static_cast<double>((lo + hi) / 2);
}

}  // namespace

TEST_CASE("enumerate_compatible_bases") {
    auto all = DigitPredicate::all();
    CHECK(enumerate_compatible_bases(DigitRule::luroth(), all, 1, 5) ==
          std::vector<DigitWord>{make_word({2}), make_word({3}), make_word({4}), make_word({5})});
    CHECK(enumerate_compatible_bases(DigitRule::engel_mod(), all, 2, 4) ==
          std::vector<DigitWord>{make_word({2, 3}), make_word({2, 4}), make_word({3, 4})});
    CHECK(enumerate_compatible_bases(DigitRule::engel(), DigitPredicate::alphabet({2}), 3, 9) ==
          std::vector<DigitWord>{make_word({2, 2, 2})});
    CHECK(enumerate_compatible_bases(DigitRule::engel_mod(), all, 3, 3).empty());
    CHECK_THROWS_AS(enumerate_compatible_bases(DigitRule::luroth(), all, 0, 5), DomainError);
    CHECK_THROWS_AS(enumerate_compatible_bases(DigitRule::luroth(), all, 1, 1), DomainError);
}

TEST_CASE("enumeration is lexicographic, valid and predicate-compatible") {
    auto pred = parse_predicate("ratio:3");
    for (const auto& rule : testing::builtin_rules()) {
        auto words = enumerate_compatible_bases(rule, pred, 3, 12);
        for (std::size_t i = 0; i < words.size(); ++i) {
            CHECK(first_invalid_index(rule, words[i]) == std::nullopt);
            CHECK(pred.classify(words[i]) == Compatibility::Compatible);
            if (i) CHECK(words[i - 1] < words[i]);
        }
    }
}

TEST_CASE("pressure_root examples") {
    auto luroth = DigitRule::luroth();
    SUBCASE("Luroth All rank 1 approaches 1 as the cap grows") {
        double prev = 0;
        for (unsigned long cap : {10ul, 100ul, 1000ul, 10000ul}) {
            auto est = pressure_root(luroth, Sign::Positive, DigitPredicate::all(), 1, cap, 1e-12);
            CHECK(est.s_value > prev);
            CHECK(est.s_value < 1);
            prev = est.s_value;
        }
        CHECK(prev > 0.99);
    }
    SUBCASE("alphabet {2,3} matches the Moran root at every rank") {
        const double oracle = moran_oracle({0.5, 1.0 / 6});
        CHECK(oracle == doctest::Approx(0.6009668516).epsilon(1e-9));
        for (std::size_t rank = 1; rank <= 6; ++rank) {
            auto est = pressure_root(luroth, Sign::Positive, DigitPredicate::alphabet({2, 3}), rank, 64, 1e-9);
            CHECK(est.bases_count == (1u << rank));
            CHECK(std::fabs(est.s_value - oracle) < 1e-6);
            CHECK(est.residual <= 1e-9);
        }
    }
    SUBCASE("a single base gives s = 0") {
        auto est = pressure_root(DigitRule::engel(), Sign::Positive, DigitPredicate::alphabet({2}), 4, 9, 1e-9);
        CHECK(est.bases_count == 1);
        CHECK(est.s_value == 0.0);
    }
    SUBCASE("no bases") {
        auto est = pressure_root(DigitRule::engel_mod(), Sign::Positive, DigitPredicate::all(), 3, 3, 1e-9);
        CHECK(est.bases_count == 0);
        CHECK(est.s_value == 0.0);
        CHECK(est.cap_too_small);
    }
    CHECK_THROWS_AS(pressure_root(luroth, Sign::Positive, DigitPredicate::all(), 1, 10, 0.0), DomainError);
}

TEST_CASE("positive and alternating estimates agree bitwise") {
    const char* preds[] = {"all", "alphabet:2,3,5", "ratio:2", "growth:pow:1,1"};
    for (const auto& rule : testing::builtin_rules()) {
        for (const char* p : preds) {
            auto pred = parse_predicate(p);
            auto a = pressure_root(rule, Sign::Positive, pred, 2, 20, 1e-10);
            auto b = pressure_root(rule, Sign::Alternating, pred, 2, 20, 1e-10);
            CHECK(a.s_value == b.s_value);
            CHECK(a.residual == b.residual);
            CHECK(a.bases_count == b.bases_count);
        }
    }
}

TEST_CASE("serial and parallel kernels agree bitwise") {
    for (const auto& rule : testing::builtin_rules()) {
        auto pred = parse_predicate("ratio:4");
        auto a = pressure_root(rule, Sign::Positive, pred, 3, 30, 1e-11, Kernel::Serial);
        auto b = pressure_root(rule, Sign::Positive, pred, 3, 30, 1e-11, Kernel::Parallel);
        CHECK(a.bases_count == b.bases_count);
        CHECK(std::fabs(a.s_value - b.s_value) < 1e-9);
        auto da = compatible_diameters(rule, Sign::Alternating, pred, 3, 30, Kernel::Serial);
        auto db = compatible_diameters(rule, Sign::Alternating, pred, 3, 30, Kernel::Parallel);
        CHECK(da.diameters == db.diameters);
    }
}

TEST_CASE("monotonicity in predicate restriction and cap") {
    auto luroth = DigitRule::luroth();
    auto s = [&](const char* p, unsigned long cap) {
        return pressure_root(luroth, Sign::Positive, parse_predicate(p), 2, cap, 1e-11).s_value;
    };
    CHECK(s("alphabet:2,3", 40) < s("alphabet:2,3,4", 40));
    CHECK(s("alphabet:2,3,4", 40) < s("all", 40));
    CHECK(s("all", 20) < s("all", 40));
    CHECK(s("ratio:2", 40) <= s("ratio:3", 40));
}

TEST_CASE("moran_dimension") {
    std::vector<Rational> halves{q("1/2"), q("1/2")};
    CHECK(moran_dimension(halves, 1e-12) == 1.0);
    std::vector<Rational> r{q("1/2"), q("1/6")};
    double s = moran_dimension(r, 1e-12);
    CHECK(std::fabs(s - moran_oracle({0.5, 1.0 / 6})) < 1e-9);
    CHECK(std::pow(0.5, 0.6) + std::pow(1.0 / 6, 0.6) > 1);
    CHECK(std::pow(0.5, 0.65) + std::pow(1.0 / 6, 0.65) < 1);

    double prev = 0;
    for (int n : {10, 100, 1000}) {
        std::vector<Rational> lur;
        for (int c = 2; c <= n; ++c) lur.push_back(Rational(1, c * (c - 1)));
        double sn = moran_dimension(lur, 1e-12);
        CHECK(sn > prev);
        prev = sn;
    }

    std::vector<Rational> bad{q("1/2"), q("1")};
    CHECK_THROWS_AS(moran_dimension(bad, 1e-9), DomainError);
    std::vector<Rational> too_big{q("2/3"), q("2/3")};
    CHECK_THROWS_AS(moran_dimension(too_big, 1e-9), DomainError);
}

TEST_CASE("measure_at_rank") {
    CHECK(measure_at_rank(DigitRule::luroth(), Sign::Positive, DigitPredicate::alphabet({2, 3}), 2, 3) == q("4/9"));
    CHECK(measure_at_rank(DigitRule::pierce(), Sign::Alternating, DigitPredicate::all(), 1, 10) == q("9/10"));
    CHECK(measure_at_rank(DigitRule::luroth(), Sign::Positive, DigitPredicate::all(), 1, 1000) == q("999/1000"));

    // nested outer approximations for a hereditary predicate
    auto pred = parse_predicate("alphabet:2,3,7");
    for (const auto& rule : {DigitRule::luroth(), DigitRule::engel()}) {
        Rational prev = 2;
        for (std::size_t rank = 1; rank <= 4; ++rank) {
            Rational m = measure_at_rank(rule, Sign::Positive, pred, rank, 7);
            CHECK(m <= prev);
            prev = m;
        }
    }
}
