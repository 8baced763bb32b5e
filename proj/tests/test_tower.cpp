#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinq/number_parser.hpp"
#include "kleinq/tower.hpp"

#include <random>

using namespace kleinq;

namespace {

TowerElement sqrt_of(const TowerPtr& t, int level) { return TowerElement::generator(t, level); }

TowerPtr q_sqrt15() { return Tower::rationals()->extend_sqrt(TowerElement(rat(15))); }

} // namespace

TEST_CASE("defining relation sqrt(15)^2 = 15") {
    TowerPtr t = q_sqrt15();
    TowerElement s = sqrt_of(t, 0);
    CHECK(s * s == TowerElement(rat(15)));
}

TEST_CASE("inverse by conjugation: (1 + sqrt(15))^-1") {
    TowerPtr t = q_sqrt15();
    TowerElement x = TowerElement::one(t) + sqrt_of(t, 0);
    TowerElement xi = x.inv();
    CHECK(x * xi == TowerElement(rat(1)));
    // (-1 + sqrt(15)) / 14
    TowerElement expect = (-TowerElement::one(t) + sqrt_of(t, 0)) / 14;
    CHECK(xi == expect);
}

TEST_CASE("s_2 = sqrt(3): square and r_2 = 2 s_2 / (2 - 1)") {
    TowerPtr t = Tower::rationals()->extend_sqrt(TowerElement(rat(3)));
    TowerElement s2 = sqrt_of(t, 0);
    CHECK(s2 * s2 == TowerElement(rat(3)));
    TowerElement r2 = TowerElement(rat(2)) * s2 / TowerElement(rat(1));
    CHECK(r2 == s2 + s2);
}

TEST_CASE("exact_sqrt in Q") {
    CHECK(*TowerElement(rat(9, 4)).exact_sqrt() == TowerElement(rat(3, 2)));
    CHECK(!TowerElement(rat(15)).exact_sqrt().has_value());
    CHECK(TowerElement(rat(0)).exact_sqrt()->is_zero());
    CHECK(!TowerElement(rat(-4)).exact_sqrt().has_value());
}

TEST_CASE("exact_sqrt in a quadratic extension: 16 + 6 sqrt(7)") {
    TowerPtr t = Tower::rationals()->extend_sqrt(TowerElement(rat(7)));
    TowerElement x = TowerElement(rat(16)) + TowerElement(rat(6)) * sqrt_of(t, 0);
    auto r = x.exact_sqrt();
    REQUIRE(r.has_value());
    CHECK(*r == TowerElement(rat(3)) + sqrt_of(t, 0));
    CHECK(*r * *r == x);
    CHECK(r->sign() > 0);
}

TEST_CASE("square radicand is recognized inside a deeper tower") {
    // sqrt(6) already exists in Q(sqrt(2), sqrt(3)) as sqrt(2)*sqrt(3)
    TowerPtr t2 = Tower::rationals()->extend_sqrt(TowerElement(rat(2)));
    TowerPtr t23 = t2->extend_sqrt(TowerElement(rat(3)));
    auto r = (TowerElement::zero(t23) + TowerElement(rat(6))).exact_sqrt();
    REQUIRE(r.has_value());
    CHECK(*r == sqrt_of(t23, 0) * sqrt_of(t23, 1));
    CHECK_THROWS(t23->extend_sqrt(TowerElement(rat(6))));
}

TEST_CASE("sign determination") {
    CHECK(TowerElement(rat(0)).sign() == 0);
    TowerPtr t = q_sqrt15();
    TowerElement x = TowerElement(rat(8)) * sqrt_of(t, 0) + TowerElement(rat(31));
    CHECK(x.sign() == 1);
    CHECK((-x).sign() == -1);
    // 4 - sqrt(15) > 0 but close to zero relative to terms
    CHECK((TowerElement(rat(4)) - sqrt_of(t, 0)).sign() == 1);
    CHECK((sqrt_of(t, 0) - TowerElement(rat(4))).sign() == -1);
}

TEST_CASE("approximate: certified shrinking intervals") {
    auto [lo1, hi1] = TowerElement(rat(1, 3)).approximate(20);
    CHECK(lo1 <= rat(1, 3));
    CHECK(hi1 >= rat(1, 3));
    CHECK(hi1 - lo1 <= Rational(1) / (1 << 20));

    TowerPtr t = q_sqrt15();
    TowerElement lambda = -(TowerElement(rat(8)) * sqrt_of(t, 0)) - TowerElement(rat(31));
    auto [lo, hi] = lambda.approximate(30);
    CHECK(lo <= rat(-619838667696593LL, 10000000000000LL));
    CHECK(hi >= rat(-619838667696594LL, 10000000000000LL));
    auto [lo2, hi2] = lambda.approximate(60);
    CHECK(lo2 >= lo);
    CHECK(hi2 <= hi);
    CHECK(hi2 - lo2 <= hi - lo);
    CHECK(lambda.decimal(15) == "-61.9838667696593");
}

TEST_CASE("field axioms on random elements of Q(sqrt(2), sqrt(5))") {
    TowerPtr t = Tower::rationals()->extend_sqrt(TowerElement(rat(2)));
    t = t->extend_sqrt(TowerElement(rat(5)));
    std::mt19937 rng(42);
    auto rnd = [&] {
        std::vector<Rational> c(4);
        for (auto& x : c) x = rat(static_cast<long>(rng() % 19) - 9, 1 + rng() % 7);
        return TowerElement(t, c);
    };
    for (int it = 0; it < 50; ++it) {
        TowerElement x = rnd(), y = rnd();
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
        if (!x.is_zero()) {
            auto sq = (x * x).exact_sqrt();
            REQUIRE(sq.has_value());
            CHECK(*sq * *sq == x * x);
            CHECK(sq->sign() >= 0);
        }
        // sign agrees with interval midpoint for nonzero values
        if (!x.is_zero()) {
            auto [lo, hi] = x.approximate(80);
            if (sgn(lo) == sgn(hi)) CHECK(x.sign() == sgn(lo));
        }
    }
}

TEST_CASE("complexified arithmetic") {
    TowerPtr t = q_sqrt15()->complexify();
    TowerElement i = TowerElement::imaginary(t);
    CHECK(i * i == TowerElement(rat(-1)));
    TowerElement z = TowerElement(rat(2)) + TowerElement(rat(3)) * i;
    CHECK(z.conjugate() * z == TowerElement(rat(13)));
    CHECK(z.real_part() == TowerElement(rat(2)));
    CHECK(z.imag_part() == TowerElement(rat(3)));
    CHECK((z * z.inv()) == TowerElement(rat(1)));
    CHECK_THROWS(i.sign());
}

TEST_CASE("tower embedding and mismatch") {
    TowerPtr a = Tower::rationals()->extend_sqrt(TowerElement(rat(2)));
    TowerPtr b = Tower::rationals()->extend_sqrt(TowerElement(rat(3)));
    TowerElement x = sqrt_of(a, 0), y = sqrt_of(b, 0);
    CHECK_THROWS(x + y);
    CHECK(x + TowerElement(rat(1)) == TowerElement(rat(1)) + x);
}

TEST_CASE("number grammar round-trips and builds minimal towers") {
    NumberParser p;
    TowerElement v = p.parse("(-1 + sqrt(15))/14");
    CHECK(p.tower()->levels() == 1);
    CHECK(v * (TowerElement(rat(1)) + TowerElement::generator(p.real_tower(), 0)) ==
          TowerElement(rat(1)));
    CHECK(p.parse("sqrt(9/4)") == TowerElement(rat(3, 2)));
    CHECK(p.tower()->levels() == 1); // no new level for a square
    CHECK(p.parse("sqrt(2)*sqrt(3)") == p.parse("sqrt(6)"));
    NumberParser q;
    TowerElement w = q.parse("3/2 - 2*i");
    CHECK(w.imag_part() == TowerElement(rat(-2)));
    // round-trip through the printed literal
    NumberParser r;
    TowerElement back = r.parse(v.to_string());
    CHECK(back == v);
}

TEST_CASE("nested radical literal: certified rendering of an exact expression") {
    NumberParser p;
    TowerElement a = p.parse(
        "(488*sqrt(15) - 3*sqrt(215208*sqrt(15) + 833497) + 1890)/(3*(8*sqrt(15) + 31))");
    CHECK(p.tower()->levels() == 2);
    CHECK(a.sign() == -1);
    CHECK(a.decimal(15) == "-0.502000420331516");
    CHECK(a.decimal(25) == "-0.502000420331515718082794");
}
