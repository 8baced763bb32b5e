#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinq/rational_function.hpp"
#include "kleinq/tower.hpp"

#include <random>

using namespace kleinq;

using P = Poly<TowerElement>;
using RF = RationalFunction<TowerElement>;

namespace {

P zpow(int k) { return P::monomial(TowerElement(rat(1)), k); }

std::mt19937 rng(11);

P random_poly(int max_deg, bool nonzero = false) {
    for (;;) {
        int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        std::vector<TowerElement> v;
        for (int i = 0; i <= d; ++i)
            v.emplace_back(rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3));
        P p(std::move(v));
        if (!nonzero || !p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("hermite: 1/z^2 integrates to -1/z") {
    RF f(P(1), zpow(2));
    auto h = hermite_reduce(f);
    CHECK(h.residues_vanish());
    CHECK(h.rational_part == RF(P(-1), zpow(1)));
}

TEST_CASE("hermite: 1/z has remainder (1, z)") {
    RF f(P(1), zpow(1));
    auto h = hermite_reduce(f);
    CHECK(!h.residues_vanish());
    REQUIRE(h.remainder.size() == 1);
    CHECK(h.remainder[0].first == P(1));
    CHECK(h.remainder[0].second == zpow(1));
    CHECK(h.rational_part.is_zero());
}

TEST_CASE("hermite round-trip on 100 random rational functions") {
    int done = 0;
    while (done < 100) {
        P num = random_poly(8);
        P den = random_poly(8, true);
        if (den.degree() < 1) continue;
        RF f(num, den);
        if (f.is_zero()) continue;
        auto h = hermite_reduce(f);
        RF back = h.rational_part.derivative() + h.remainder_function();
        CHECK(back == f);
        for (const auto& [n, d] : h.remainder) {
            CHECK(gcd_monic(d, d.derivative()).degree() == 0); // squarefree
            CHECK(gcd_monic(n, d).degree() == 0);              // reduced
        }
        ++done;
    }
}

TEST_CASE("hermite remainder emptiness matches exact residues at distinct rational poles") {
    // denominators with distinct rational roots: residues are num(a)/den'(a)
    int done = 0;
    while (done < 40) {
        int k = 2 + static_cast<int>(rng() % 3);
        std::vector<TowerElement> roots;
        P den(1);
        for (int i = 0; i < k; ++i) {
            TowerElement a(rat(static_cast<long>(i) * 2 + static_cast<long>(rng() % 2)));
            roots.push_back(a);
            den *= P(std::vector<TowerElement>{-a, TowerElement(rat(1))});
        }
        P num = random_poly(k - 1);
        if (num.is_zero()) continue;
        RF f(num, den);
        auto h = hermite_reduce(f);
        bool all_zero_residues = true;
        for (const auto& a : roots) {
            TowerElement res = f.num().eval(a) / f.den().derivative().eval(a);
            if (!res.is_zero()) all_zero_residues = false;
        }
        CHECK(h.residues_vanish() == all_zero_residues);
        ++done;
    }
    // a combination with vanishing residues: derivative of 1/((z-1)(z-2))
    P d2 = P(std::vector<TowerElement>{TowerElement(rat(-1)), TowerElement(rat(1))}) *
           P(std::vector<TowerElement>{TowerElement(rat(-2)), TowerElement(rat(1))});
    RF g = RF(P(1), d2).derivative();
    CHECK(hermite_reduce(g).residues_vanish());
}

TEST_CASE("rational function ord helpers") {
    RF f(P(1), zpow(2));
    CHECK(f.ord_at(zpow(1)) == -2);
    CHECK(RF(zpow(3), P(1)).ord_at(zpow(1)) == 3);
    P zm1(std::vector<TowerElement>{TowerElement(rat(-1)), TowerElement(rat(1))});
    CHECK(RF(P(1), zm1 * zm1).ord_at(zm1) == -2);
    CHECK(RF(zpow(1), P(1)).ord_at_infinity() == -1);
}
