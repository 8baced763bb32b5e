#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinq/param_ring.hpp"
#include "kleinq/poly.hpp"
#include "kleinq/tower.hpp"
#include "kleinq/wedge.hpp"

#include <random>

using namespace kleinq;

using P = Poly<TowerElement>;

namespace {

P zpow(int k) { return P::monomial(TowerElement(rat(1)), k); }

P from_ints(std::initializer_list<long> cs) {
    std::vector<TowerElement> v;
    for (long c : cs) v.emplace_back(rat(c));
    return P(std::move(v));
}

std::mt19937 rng(7);

P random_poly(int max_deg) {
    int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    std::vector<TowerElement> v;
    for (int i = 0; i <= d; ++i) v.emplace_back(rat(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3));
    return P(std::move(v));
}

// independent cofactor-expansion determinant over the first k derivative rows
P naive_minor(const std::vector<P>& curve, int k, const std::vector<int>& cols) {
    std::vector<std::vector<P>> rows(static_cast<size_t>(k));
    rows[0] = curve;
    for (int j = 1; j < k; ++j) {
        rows[static_cast<size_t>(j)].resize(curve.size());
        for (size_t c = 0; c < curve.size(); ++c)
            rows[static_cast<size_t>(j)][c] = rows[static_cast<size_t>(j - 1)][c].derivative();
    }
    auto det = [&](auto&& self, std::vector<int> cs, int row) -> P {
        if (cs.size() == 1) return rows[static_cast<size_t>(row)][static_cast<size_t>(cs[0])];
        P acc;
        for (size_t t = 0; t < cs.size(); ++t) {
            std::vector<int> rest = cs;
            rest.erase(rest.begin() + static_cast<long>(t));
            P term = rows[static_cast<size_t>(row)][static_cast<size_t>(cs[t])] * self(self, rest, row + 1);
            acc = (t % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det(det, cols, 0);
}

} // namespace

TEST_CASE("gcd examples") {
    CHECK(gcd_monic(from_ints({-1, 0, 1}), from_ints({-1, 1})) == from_ints({-1, 1}));
    CHECK(gcd_monic(zpow(3), zpow(2) * from_ints({1, 1})) == zpow(2));
    CHECK(gcd_monic(P(), P()).is_zero());
    // R = z^4 + r2 z^2 - 1 with r2 = 2 sqrt(3): gcd(R, R') = 1
    TowerPtr t = Tower::rationals()->extend_sqrt(TowerElement(rat(3)));
    TowerElement r2 = TowerElement::generator(t, 0) * 2;
    P big = zpow(4) + P::monomial(r2, 2) - P(1);
    CHECK(gcd_monic(big, big.derivative()).degree() == 0);
}

TEST_CASE("gcd divides both and is divided by common divisors (random)") {
    for (int it = 0; it < 60; ++it) {
        P a = random_poly(5), b = random_poly(5), c = random_poly(3);
        if ((a * c).is_zero() && (b * c).is_zero()) continue;
        P g = gcd_monic(a * c, b * c);
        if (!(a * c).is_zero()) CHECK(divmod(a * c, g).second.is_zero());
        if (!(b * c).is_zero()) CHECK(divmod(b * c, g).second.is_zero());
        if (!c.is_zero() && !a.is_zero() && !b.is_zero())
            CHECK(divmod(g, make_monic(c)).second.is_zero());
    }
}

TEST_CASE("squarefree decomposition") {
    auto d = squarefree_decomposition(zpow(2) * from_ints({-1, 1}));
    REQUIRE(d.size() == 2);
    CHECK(d[0].first == from_ints({-1, 1}));
    CHECK(d[0].second == 1);
    CHECK(d[1].first == zpow(1));
    CHECK(d[1].second == 2);

    TowerPtr t = Tower::rationals()->extend_sqrt(TowerElement(rat(15)));
    TowerElement c = TowerElement::generator(t, 0) * 8 + 31;
    P p = zpow(4) + P(c);
    auto d2 = squarefree_decomposition(p);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].first == p);
    CHECK(d2[0].second == 1);
}

TEST_CASE("squarefree reassembles the input (random)") {
    for (int it = 0; it < 40; ++it) {
        P a = random_poly(4), b = random_poly(2);
        if (a.is_zero() || b.is_zero()) continue;
        P f = a * b * b;
        if (f.degree() < 1) continue;
        auto d = squarefree_decomposition(f);
        P prod(f.leading());
        for (const auto& [fac, mult] : d)
            for (int i = 0; i < mult; ++i) prod *= fac;
        CHECK(prod == f);
        for (const auto& [fac, mult] : d) CHECK(gcd_monic(fac, fac.derivative()).degree() == 0);
    }
}

TEST_CASE("ord_at_place") {
    CHECK(ord_at_place(zpow(3) * from_ints({-1, 1}), zpow(1)) == 3);
    CHECK(ord_at_place(from_ints({5}), zpow(1)) == 0);
    CHECK_THROWS(ord_at_place(P(), zpow(1)));
}

TEST_CASE("wedge minors: fixed cases") {
    // F = (1, z, z^2, z^3), k = 2, minor {0,1} = 1
    std::vector<P> f = {P(1), zpow(1), zpow(2), zpow(3)};
    auto w = wedge_minors(f, 2);
    CHECK(w[0] == P(1));
    // coordinates (-1/5, z^2, z^3, z^5): minor {0,1} = -(2/5) z
    std::vector<P> f3 = {P(TowerElement(rat(-1, 5))), zpow(2), zpow(3), zpow(5)};
    auto w3 = wedge_minors(f3, 2);
    CHECK(w3[0] == P::monomial(TowerElement(rat(-2, 5)), 1));
    // full Wronskian of the rational normal curve is a nonzero constant
    auto w4 = wedge_minors(f, 4);
    REQUIRE(w4.size() == 1);
    CHECK(w4[0].degree() == 0);
    CHECK(w4[0] == naive_minor(f, 4, {0, 1, 2, 3}));
}

TEST_CASE("wedge minors agree with the naive cofactor oracle (random)") {
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(4, n + 1)));
        std::vector<P> curve;
        for (int j = 0; j <= n; ++j) curve.push_back(random_poly(4));
        bool allzero = true;
        for (const auto& p : curve) allzero = allzero && p.is_zero();
        if (allzero) continue;
        auto w = wedge_minors(curve, k);
        auto subsets = column_subsets(n + 1, k);
        REQUIRE(w.size() == subsets.size());
        for (size_t i = 0; i < subsets.size(); ++i)
            CHECK(w[i] == naive_minor(curve, k, subsets[i]));
    }
}

TEST_CASE("param ring polynomials drive wedges too") {
    auto ring = ParamRing::make({"mu1", "mu2"});
    using PP = Poly<ParamPoly>;
    ParamPoly mu1 = ParamPoly::variable(ring, 0);
    ParamPoly mu2 = ParamPoly::variable(ring, 1);
    // (z^2 + mu1 z^3) and z^5: wedge coordinate = 3 z^6 + 2 mu1 z^7
    PP a = PP::monomial(ParamPoly(1), 2) + PP::monomial(mu1, 3);
    PP b = PP::monomial(ParamPoly(1), 5);
    PP w = a * b.derivative() - b * a.derivative();
    PP expect = PP::monomial(ParamPoly(3), 6) + PP::monomial(mu1 * ParamPoly(2), 7);
    CHECK(w == expect);
    CHECK((mu1 * mu2).to_string() == "mu1*mu2");
    CHECK((ParamPoly(2) + (-mu2) * ParamPoly(3)).to_string() == "-3*mu2 + 2");
}

TEST_CASE("poly shift and reversed") {
    P p = from_ints({1, 2, 1}); // (1+z)^2
    CHECK(p.shift(TowerElement(rat(-1))) == zpow(2));
    CHECK(zpow(3).reversed(3) == P(1));
    CHECK(from_ints({2, 0, 1}).reversed(4) == from_ints({0, 0, 1, 0, 2}));
}
