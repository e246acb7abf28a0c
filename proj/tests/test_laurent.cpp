#include <random>

#include "doctest.h"
#include "qmb/laurent.hpp"

using qmb::Int;
using qmb::LaurentPoly;

TEST_CASE("constants and basic arithmetic") {
    LaurentPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.to_string() == "0");

    LaurentPoly one(1);
    CHECK(one.is_one());
    CHECK(one.to_string() == "1");

    CHECK((one + LaurentPoly(-1)).is_zero());
    CHECK((LaurentPoly(2) * LaurentPoly(3)).to_string() == "6");
}

TEST_CASE("q powers and canonical text form") {
    CHECK(LaurentPoly::q_power(2).to_string() == "q^2");
    CHECK(LaurentPoly::q_power(1).to_string() == "q");
    CHECK(LaurentPoly::q_power(-1).to_string() == "q^-1");
    CHECK(LaurentPoly::neg_q_power(-1).to_string() == "-q^-1");
    CHECK(LaurentPoly::neg_q_power(2).to_string() == "q^2");
    CHECK(LaurentPoly::q_inv_minus_q().to_string() == "q^-1 - q");

    LaurentPoly p = LaurentPoly::term(-2, -1) + LaurentPoly(3) + LaurentPoly::q_power(2);
    CHECK(p.to_string() == "-2*q^-1 + 3 + q^2");
    CHECK(p.to_latex() == "-2q^{-1} + 3 + q^{2}");
}

TEST_CASE("q^-1 - q squared") {
    LaurentPoly p = LaurentPoly::q_inv_minus_q();
    CHECK((p * p).to_string() == "q^-2 - 2 + q^2");
}

TEST_CASE("specialization at q = 1") {
    CHECK(LaurentPoly::q_inv_minus_q().eval_at_one() == 0);
    CHECK(LaurentPoly::q_power(-5).eval_at_one() == 1);
    LaurentPoly p = LaurentPoly::term(-2, -1) + LaurentPoly(3) + LaurentPoly::q_power(2);
    CHECK(p.eval_at_one() == 2);
}

TEST_CASE("parse inverts to_string") {
    for (const char* text :
         {"0", "1", "-1", "q", "-q", "q^-1", "-2*q^-1 + 3 + q^2", "q^-2 - 2 + q^2",
          "q^-1 - q", "-q^-3 + q^-1", "17*q^5", "q^-4 - q^-2 - 1 + q^2"}) {
        CAPTURE(text);
        CHECK(LaurentPoly::parse(text).to_string() == text);
    }
    CHECK_THROWS_AS(LaurentPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("q^"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("2**q"), std::invalid_argument);
}

TEST_CASE("json round trip") {
    LaurentPoly p = LaurentPoly::term(-2, -1) + LaurentPoly(3) + LaurentPoly::q_power(2);
    CHECK(p.to_json() == "[[-1,\"-2\"],[0,\"3\"],[2,\"1\"]]");
    CHECK(LaurentPoly::from_json_text(p.to_json()) == p);
    CHECK(LaurentPoly::from_json_text("[]").is_zero());
}

TEST_CASE("big coefficients stay exact") {
    LaurentPoly p = LaurentPoly(1);
    for (int k = 0; k < 200; ++k) p *= LaurentPoly(3);
    Int expect = 1;
    for (int k = 0; k < 200; ++k) expect *= 3;
    CHECK(p.eval_at_one() == expect);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> exp_dist(-6, 6);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    std::uniform_int_distribution<int> len_dist(0, 4);

    auto random_poly = [&] {
        LaurentPoly p;
        int len = len_dist(rng);
        for (int t = 0; t < len; ++t)
            p += LaurentPoly::term(coeff_dist(rng), exp_dist(rng));
        return p;
    };

    for (int trial = 0; trial < 1000; ++trial) {
        LaurentPoly a = random_poly();
        LaurentPoly b = random_poly();
        LaurentPoly c = random_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * LaurentPoly(1) == a);
        // canonical form: serialize and reparse
        CHECK(LaurentPoly::parse(a.to_string()) == a);
    }
}
