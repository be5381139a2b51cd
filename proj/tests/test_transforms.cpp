#include <doctest.h>

#include <set>

#include "perron/coverings.hpp"
#include "perron/dimension.hpp"
#include "perron/errors.hpp"
#include "perron/transforms.hpp"
#include "test_support.hpp"

using namespace perron;
using perron::testing::q;

namespace {

Rational factorial(unsigned n) {
    Natural f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

Rational two_pow(unsigned k) {
    Natural p = 1;
    p <<= k;
    return Rational(p);
}

}  // namespace

TEST_CASE("transform_digits examples") {
    CHECK(transform_digits(Transform::t_engel(), make_word({2, 3, 5})) == make_word({2, 4, 7}));
    CHECK(transform_digits(Transform::g_pierce(), make_word({3, 5, 9})) == make_word({4, 6, 10}));
    CHECK(transform_digits(Transform::t_engel(), make_word({2, 2, 2})) == make_word({2, 3, 4}));
    CHECK(transform_digits(Transform::fp(DigitRule::luroth()), make_word({7, 2})) == make_word({7, 2}));

    CHECK_THROWS_AS(transform_digits(Transform::t_engel(), make_word({3, 2})), ValidityError);
    CHECK_THROWS_AS(transform_digits(Transform::g_pierce(), make_word({3, 3})), ValidityError);
    // inverse outside the range: [2,3] is EngelMod-valid but not a T image
    CHECK_THROWS_AS(transform_digits(Transform::t_engel(), make_word({3, 3}), Direction::Inverse), ValidityError);
    CHECK(transform_digits(Transform::t_engel(), make_word({2, 4, 7}), Direction::Inverse) == make_word({2, 3, 5}));
    // G maps onto Pierce words with first digit >= 3
    CHECK_THROWS_AS(transform_digits(Transform::g_pierce(), make_word({2, 4}), Direction::Inverse), ValidityError);
}

TEST_CASE("T is a bijection from Engel words onto EngelMod words") {
    auto all = DigitPredicate::all();
    const Natural cap = 9;
    for (std::size_t rank = 1; rank <= 3; ++rank) {
        auto engel = enumerate_compatible_bases(DigitRule::engel(), all, rank, cap);
        std::set<DigitWord> images;
        for (const auto& w : engel) {
            DigitWord img = transform_digits(Transform::t_engel(), w);
            CHECK(first_invalid_index(DigitRule::engel_mod(), img) == std::nullopt);
            CHECK(transform_digits(Transform::t_engel(), img, Direction::Inverse) == w);
            images.insert(img);
        }
        CHECK(images.size() == engel.size());
        // every EngelMod word whose preimage stays under the cap is hit
        auto mod = enumerate_compatible_bases(DigitRule::engel_mod(), all, rank, cap + rank - 1);
        for (const auto& w : mod) {
            DigitWord pre = transform_digits(Transform::t_engel(), w, Direction::Inverse);
            bool under_cap = std::all_of(pre.begin(), pre.end(), [&](const Natural& d) { return d <= cap; });
            CHECK(images.count(w) == (under_cap ? 1u : 0u));
        }
    }
}

TEST_CASE("transform_point examples") {
    SUBCASE("F_P of 1 under Luroth shrinks to 2/3") {
        auto t = Transform::fp(DigitRule::luroth());
        Rational prev_width = 2;
        for (std::size_t rank : {4u, 8u, 16u, 32u}) {
            CylinderInterval c = transform_point(t, 1, rank);
            CHECK(c.sign == Sign::Alternating);
            CHECK(c.lo < q("2/3"));
            CHECK(q("2/3") < c.hi);
            CHECK(c.diameter() < prev_width);
            prev_width = c.diameter();
        }
    }
    SUBCASE("T of 3/8") {
        CylinderInterval c = transform_point(Transform::t_engel(), q("3/8"), 3);
        CHECK(c.word == make_word({3, 10, 11}));
        CHECK(c.lo == cylinder(DigitRule::engel_mod(), make_word({3, 10, 11}), Sign::Positive).lo);
    }
    SUBCASE("G shifts the first Pierce digit") {
        // 5/14 has alternating Pierce digits starting with 3
        auto e = alternating_digits(DigitRule::pierce(), q("5/14"), 1);
        REQUIRE(e.digits == make_word({3}));
        CHECK(transform_point(Transform::g_pierce(), q("5/14"), 1).word == make_word({4}));
    }
    SUBCASE("terminating alternating digits raise ISPoint") {
        try {
            transform_point(Transform::g_pierce(), q("2/5"), 4);
            FAIL("expected ISPointError");
        } catch (const ISPointError& e) {
            CHECK(e.rank() == 2);
            CHECK(e.digits() == make_word({3}));
        }
    }
    SUBCASE("inverse F_P reads alternating digits") {
        auto t = Transform::fp(DigitRule::luroth());
        CylinderInterval c = transform_point(t, q("2/3") - q("1/1000000"), 3, Direction::Inverse);
        CHECK(c.sign == Sign::Positive);
        CHECK(c.word.size() == 3);
    }
}

TEST_CASE("t_ratio") {
    CHECK(t_ratio(make_word({2})) == 1);
    CHECK(t_ratio(make_word({2, 3})) == 1);
    for (unsigned k = 1; k <= 10; ++k) {
        DigitWord w(k, Natural(2));
        CHECK(t_ratio(w) == two_pow(k) / factorial(k + 1));
        if (k > 1) {
            DigitWord shorter(k - 1, Natural(2));
            CHECK(t_ratio(w) / t_ratio(shorter) == Rational(2) / (k + 1));
        }
    }
    CHECK_THROWS_AS(t_ratio(make_word({2, 1})), ValidityError);
}

TEST_CASE("t_ratio stays below 2") {
    std::mt19937_64 rng(17);
    auto engel = DigitRule::engel();
    for (int i = 0; i < 2000; ++i) {
        DigitWord w = testing::random_word(engel, rng, 1 + rng() % 12, 1 + rng() % 30);
        Rational r = t_ratio(w);
        CHECK(r > 0);
        CHECK(r < 2);
    }
}

TEST_CASE("t_ratio does not decay along fast-growing words") {
    // c_m >= m^3 from position k on: the ratio converges to a positive limit
    std::mt19937_64 rng(23);
    auto engel = DigitRule::engel();
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t k = 3;
        DigitWord w = testing::random_word(engel, rng, k - 1, 3);
        Rational at_k;
        for (std::size_t m = k; m <= 40; ++m) {
            Natural floor_m = Natural(m) * m * m;
            Natural c = std::max<Natural>(w.empty() ? Natural(2) : Natural(w.back()), floor_m) + rng() % 50;
            w.push_back(c);
            Rational r = t_ratio(w);
            if (m == k) at_k = r;
            // each new factor is 1 - O(1/m^2), so the product stays bounded away from 0
            CHECK(to_double(r) > 0.3 * to_double(at_k));
        }
    }
}

TEST_CASE("F_P preserves cylinder diameters and hull measure") {
    std::mt19937_64 rng(29);
    for (const auto& rule : testing::builtin_rules()) {
        auto t = Transform::fp(rule);
        for (int i = 0; i < 200; ++i) {
            DigitWord w = testing::random_word(rule, rng, 1 + rng() % 8);
            DigitWord img = transform_digits(t, w);
            CHECK(cylinder(rule, img, Sign::Alternating).diameter() == cylinder(rule, w, Sign::Positive).diameter());

            Natural first = rule(w) + 1 + rng() % 5;
            FamilySet fs{Sign::Positive, w, first, Natural(first + rng() % 7)};
            FamilySet image = fs;
            image.sign = Sign::Alternating;
            CHECK(family_set_hull(rule, fs).width() == family_set_hull(rule, image).width());
        }
    }
}
