#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace equiloc;
using testutil::Rng;

namespace {

SeriesQ constant_series(std::vector<Rational> values, int lo = 0) {
    std::vector<ExpSumQ> coef;
    for (auto& v : values)
        coef.push_back(ExpSumQ::monomial(v, 0));
    return SeriesQ::from_coefficients(lo, std::move(coef), 0);
}

} // namespace

TEST_CASE("series multiplication: difference of squares") {
    auto a = constant_series({Rational(1), Rational(1), Rational(0)});
    auto b = constant_series({Rational(1), Rational(-1), Rational(0)});
    auto p = a * b;
    CHECK(p.coefficient(0) == ExpSumQ::monomial(Rational(1), 0));
    CHECK(p.coefficient(1).is_zero());
    CHECK(p.coefficient(2) == ExpSumQ::monomial(Rational(-1), 0));
}

TEST_CASE("series multiplication: valuation cancellation") {
    // eps^{-1} and eps, both stored with enough window to see eps^0
    auto inv = constant_series({Rational(1), Rational(0), Rational(0)}, -1);
    auto eps = constant_series({Rational(0), Rational(1), Rational(0)}, 0);
    auto p = inv * eps;
    CHECK(p.lo() == -1);
    CHECK(p.coefficient(-1).is_zero());
    CHECK(p.coefficient(0) == ExpSumQ::monomial(Rational(1), 0));
    CHECK(p.coefficient(1).is_zero());
}

TEST_CASE("series multiplication: exp(c eps) exp(-c eps) = 1 through order 2") {
    Rational c(5, 3);
    auto a = SeriesQ::exponential(c, 2, 0);
    auto b = SeriesQ::exponential(-c, 2, 0);
    auto p = a * b;
    CHECK(p.coefficient(0) == ExpSumQ::monomial(Rational(1), 0));
    CHECK(p.coefficient(1).is_zero());
    CHECK(p.coefficient(2).is_zero());
}

TEST_CASE("series inversion") {
    SECTION("monomial 2 eps") {
        auto a = constant_series({Rational(0), Rational(2), Rational(0)});
        auto inv = a.invert();
        CHECK(inv.lo() == -1);
        CHECK(inv.coefficient(-1) == ExpSumQ::monomial(Rational(1, 2), 0));
        CHECK(inv.coefficient(0).is_zero());
    }
    SECTION("u + eps inverts to the geometric series") {
        std::vector<ExpSumQ> coef{ExpSumQ::monomial(Rational(1), 1),
                                  ExpSumQ::monomial(Rational(1), 0),
                                  ExpSumQ(), ExpSumQ()};
        auto a = SeriesQ::from_coefficients(0, coef, 0);
        auto inv = a.invert();
        CHECK(inv.coefficient(0) == ExpSumQ::monomial(Rational(1), -1));
        CHECK(inv.coefficient(1) == ExpSumQ::monomial(Rational(-1), -2));
        CHECK(inv.coefficient(2) == ExpSumQ::monomial(Rational(1), -3));
        auto check = a * inv;
        CHECK(check.coefficient(0) == ExpSumQ::monomial(Rational(1), 0));
        for (int k = 1; k <= check.hi(); ++k)
            CHECK(check.coefficient(k).is_zero());
    }
    SECTION("the zero series is not invertible") {
        auto zero = constant_series({Rational(0), Rational(0)});
        CHECK_THROWS_AS(zero.invert(), NonInvertibleLeadingTerm);
    }
    SECTION("a two-term leading coefficient is not invertible") {
        ExpSumQ lead;
        lead.add_term(Frequency::constant(Rational(0)),
                      LaurentQ::monomial(Rational(1), 0));
        lead.add_term(Frequency::constant(Rational(1)),
                      LaurentQ::monomial(Rational(1), 0));
        auto s = SeriesQ::from_coefficients(0, {lead, ExpSumQ()}, 0);
        CHECK_THROWS_AS(s.invert(), NonInvertibleLeadingTerm);
    }
    SECTION("a nonzero frequency is not invertible") {
        ExpSumQ lead;
        lead.add_term(Frequency::constant(Rational(1)),
                      LaurentQ::monomial(Rational(1), 0));
        auto s = SeriesQ::from_coefficients(0, {lead, ExpSumQ()}, 0);
        CHECK_THROWS_AS(s.invert(), NonInvertibleLeadingTerm);
    }
}

TEST_CASE("inverse times original is the unit series") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        // random invertible series: monomial leading coefficient, random tail
        int lo = static_cast<int>(testutil::rand_int(rng, -2, 2));
        int len = static_cast<int>(testutil::rand_int(rng, 2, 5));
        std::vector<ExpSumQ> coef;
        Rational lead = testutil::rand_rational(rng, 7, 4);
        if (lead == 0)
            lead = 1;
        coef.push_back(ExpSumQ::monomial(
            lead, static_cast<int>(testutil::rand_int(rng, -2, 2))));
        for (int i = 1; i < len; ++i) {
            ExpSumQ c;
            if (testutil::rand_int(rng, 0, 1))
                c.add_term(
                    Frequency::constant(testutil::rand_rational(rng, 3, 2)),
                    LaurentQ::monomial(testutil::rand_rational(rng, 5, 3),
                                       static_cast<int>(
                                           testutil::rand_int(rng, -2, 2))));
            coef.push_back(std::move(c));
        }
        auto s = SeriesQ::from_coefficients(lo, std::move(coef), 0);
        auto inv = s.invert();
        REQUIRE(inv.leading_index() == -s.leading_index());
        auto unit = s * inv;
        REQUIRE(unit.coefficient(0) == ExpSumQ::monomial(Rational(1), 0));
        for (int k = unit.lo(); k <= unit.hi(); ++k)
            if (k != 0)
                REQUIRE(unit.coefficient(k).is_zero());
    }
}

TEST_CASE("product window follows the truncation rule") {
    auto a = constant_series({Rational(1), Rational(1)});         // [0,1]
    auto b = constant_series({Rational(1), Rational(2), Rational(3)}); // [0,2]
    auto p = a * b;
    CHECK(p.lo() == 0);
    CHECK(p.hi() == 1); // limited by the shorter factor
}
