#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinq/weier.hpp"

#include <random>

using namespace kleinq;

using P = FieldPoly;

namespace {

P zpow(int k) { return P::monomial(TowerElement(rat(1)), k); }

std::mt19937 rng(31);

RF random_rf(int max_deg) {
    auto rp = [&](bool nonzero) {
        for (;;) {
            int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
            std::vector<TowerElement> v;
            for (int i = 0; i <= d; ++i)
                v.emplace_back(rat(static_cast<long>(rng() % 7) - 3, 1 + rng() % 2));
            P p(std::move(v));
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return RF(rp(false), rp(true));
}

} // namespace

TEST_CASE("forms_from_data is always null") {
    WeierstrassData enneper{RF(zpow(1)), RF(1)};
    auto forms = forms_from_data(enneper);
    CHECK(verify_null(forms));
    CHECK(forms[0] == RF(P(1) - zpow(2)));
    CHECK(forms[2] == RF(zpow(1) * TowerElement(rat(2))));
    for (int it = 0; it < 12; ++it) {
        WeierstrassData w{random_rf(3), random_rf(3)};
        if (w.gauss.num().degree() < 1 && w.gauss.den().degree() < 1) continue;
        if (w.form.is_zero()) continue;
        CHECK(verify_null(forms_from_data(w)));
    }
    std::array<RF, 3> bad = {
        RF(1), RF(P(TowerElement::imaginary(Tower::rationals()->complexify()))), RF(1)};
    CHECK(!verify_null(bad));
}

TEST_CASE("kusner n=2: residues, closed form, ends, completion") {
    auto k = kusner_family(2);
    CHECK(k.s * k.s == TowerElement(rat(3)));
    CHECK(k.r == k.s * 2);
    CHECK(k.r_squarefree);
    auto forms = forms_from_data(k.data);
    CHECK(verify_null(forms));
    auto rr = residues_vanish(forms);
    CHECK(rr.all_vanish);
    NullCurveData f = integrate_null(forms);
    for (size_t j = 0; j < 3; ++j) {
        RF diff = f.components[j] - k.closed_form.components[j];
        CHECK(diff.den().degree() == 0);
        CHECK(diff.num().degree() <= 0);
    }
    for (size_t j = 0; j < 3; ++j) CHECK(f.components[j].derivative() == forms[j]);
    auto ends = classify_ends(f);
    CHECK(ends.size() >= 1);
    long total = 0;
    for (const auto& e : ends) {
        CHECK(e.embedded);
        CHECK(e.planar);
        total += e.at_infinity ? 1 : e.place.degree();
    }
    CHECK(total == 4);
    auto ept = end_product_test(f);
    CHECK(ept.polynomial);
    CHECK(ept.degree == 4);
    auto comp = complete_null_curve(f);
    CHECK(comp.curve.degree == 4);
    CHECK(comp.on_quadric);
    CHECK(comp.unbranched);
    CHECK(comp.pole_divisor_degree == 4);
    auto jm = curvature_and_jorge_meeks(k.data, 0, total);
    CHECK(jm.gauss_degree == 3);
    CHECK(jm.jorge_meeks_consistent);
}

TEST_CASE("kusner n=3 and n=5 (rational s)") {
    for (int n : {3, 5}) {
        auto k = kusner_family(n);
        auto forms = forms_from_data(k.data);
        auto f = integrate_null(forms);
        auto ends = classify_ends(f);
        long total = 0;
        for (const auto& e : ends) {
            CHECK(e.embedded);
            total += e.at_infinity ? 1 : e.place.degree();
        }
        CHECK(total == 2 * n);
        auto comp = complete_null_curve(f);
        CHECK(comp.curve.degree == 2 * n);
        CHECK(comp.unbranched);
        CHECK(comp.on_quadric);
        CHECK(curvature_and_jorge_meeks(k.data, 0, total).jorge_meeks_consistent);
    }
}

TEST_CASE("fd family wiring") {
    auto [f4, s] = fd_family(4);
    CHECK(f4.degree == 7);
    CHECK(is_contact(f4, s));
    CHECK(klein_dual(f4, s).degree == 8);
    CHECK_THROWS(fd_family(1));
}

TEST_CASE("toy error paths") {
    std::array<RF, 3> forms = {RF(P(1), zpow(1)), RF(), RF()};
    CHECK_THROWS(integrate_null(forms));
    NullCurveData bad;
    bad.components = {RF(P(1), zpow(1)), RF(), RF()};
    CHECK_THROWS(complete_null_curve(bad));
    // double pole: multiplicity 2, not embedded (isotropic leading vector)
    TowerPtr ct = Tower::rationals()->complexify();
    TowerElement i = TowerElement::imaginary(ct);
    NullCurveData dbl;
    dbl.components = {RF(P(1), zpow(2)), RF(P(i), zpow(2)), RF()};
    auto ends = classify_ends(dbl);
    REQUIRE(ends.size() == 1);
    CHECK(ends[0].multiplicity == 2);
    CHECK(!ends[0].embedded);
    auto ept = end_product_test(dbl);
    CHECK(!ept.polynomial);
    CHECK(ept.witness_component == 1);
}

TEST_CASE("peng default parameters: exact expressions and decimals") {
    auto p = peng_default_params();
    CHECK(p.a.sign() == -1);
    CHECK(p.c.decimal(15) == "-6.09838667696593");
    CHECK(p.lambda.decimal(15) == "-61.9838667696593");
    // the exact expressions evaluate slightly off the printed a/b decimals
    CHECK(p.a.decimal(15) == "-0.502000420331516");
    CHECK(p.b.decimal(15) == "41.1579116001044");
    // lambda = 10 c - 1 exactly
    CHECK(p.lambda == p.c * 10 - 1);
}

TEST_CASE("peng family and refutation (4,2)") {
    auto p = peng_default_params();
    auto w = peng_family(4, 2, p);
    CHECK(w.form.ord_at(zpow(1)) == 2);
    CHECK(w.gauss.ord_at(zpow(1)) == -2);
    auto ref = refute_peng(4, 2);
    CHECK(ref.order_mismatch);
    CHECK(ref.omega_order_at_zero == 2);
    CHECK(ref.required_order == 4);
    CHECK(ref.refuted);
    MESSAGE("residues vanish per component: ", ref.component_residues_vanish[0], " ",
            ref.component_residues_vanish[1], " ", ref.component_residues_vanish[2]);
    MESSAGE("f3 exact match: ", ref.f3_exact_match);
    MESSAGE("not_polynomial: ", ref.not_polynomial, " witness ", ref.witness_component);
    CHECK(ref.f3_exact_match);
    CHECK(ref.p_constant.scientific(3) == "1.19e8");
    CHECK(ref.q_constant.scientific(3) == "-1.21e9");
    CHECK(!(ref.p_constant == ref.q_constant));
    auto r52 = refute_peng(5, 2);
    CHECK(r52.order_mismatch);
    CHECK(r52.omega_order_at_zero == 2);
    auto r43 = refute_peng(4, 3);
    CHECK(!r43.fully_supported);
    CHECK(r43.omega_order_at_zero == 4);
    CHECK(r43.required_order == 6);
}
