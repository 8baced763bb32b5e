#include "kleinq/weier.hpp"

#include <algorithm>

namespace kleinq {

namespace {

using P = FieldPoly;

P zpow(int k) { return P::monomial(TowerElement(rat(1)), k); }

TowerPtr tower_of(const RF& f) {
    TowerPtr t = Tower::rationals();
    for (const auto& c : f.num().coeffs()) t = Tower::join(t, c.tower());
    for (const auto& c : f.den().coeffs()) t = Tower::join(t, c.tower());
    return t;
}

P lcm_poly(const P& a, const P& b) {
    if (a.is_zero() || b.is_zero()) return P();
    P g = gcd_monic(a, b);
    return make_monic(a * (b / g));
}

/// Pairwise-coprime squarefree refinement of a list of squarefree polys.
std::vector<P> refine_places(std::vector<P> raw) {
    std::vector<P> out;
    for (P p : raw) {
        p = make_monic(p);
        std::vector<P> next;
        for (const P& q : out) {
            if (p.degree() < 1) {
                next.push_back(q);
                continue;
            }
            P g = gcd_monic(p, q);
            if (g.degree() < 1) {
                next.push_back(q);
                continue;
            }
            P qr = q / g;
            if (qr.degree() > 0) next.push_back(qr);
            next.push_back(g);
            p = p / g;
        }
        if (p.degree() > 0) next.push_back(p);
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const P& a, const P& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return poly_to_string(a) < poly_to_string(b);
    });
    return out;
}

/// f(1/w) as a rational function of w.
RF at_inverse(const RF& f) {
    int dn = f.num().degree(), dd = f.den().degree();
    P num = f.num().reversed(dn);
    P den = f.den().reversed(dd);
    if (dd > dn) num = num * zpow(dd - dn);
    if (dn > dd) den = den * zpow(dn - dd);
    return RF(num, den);
}

} // namespace

std::array<RF, 3> forms_from_data(const WeierstrassData& w) {
    TowerPtr t = Tower::join(tower_of(w.gauss), tower_of(w.form))->complexify();
    RF i(P(TowerElement::imaginary(t)));
    RF one(P(TowerElement::one(t)));
    RF g2 = w.gauss * w.gauss;
    return {(one - g2) * w.form, i * (one + g2) * w.form, RF(2) * w.gauss * w.form};
}

bool verify_null(const std::array<RF, 3>& forms) {
    RF s = forms[0] * forms[0] + forms[1] * forms[1] + forms[2] * forms[2];
    return s.is_zero();
}

ResidueReport residues_vanish(const std::array<RF, 3>& forms) {
    ResidueReport rep;
    rep.all_vanish = true;
    std::vector<P> places;
    for (size_t j = 0; j < 3; ++j) {
        auto h = hermite_reduce(forms[j]);
        rep.component_vanishes[j] = h.residues_vanish();
        if (!h.residues_vanish()) {
            rep.all_vanish = false;
            for (const auto& [num, den] : h.remainder)
                for (const auto& [fac, mult] : squarefree_decomposition(den)) places.push_back(fac);
        }
    }
    rep.offending_places = refine_places(std::move(places));
    return rep;
}

NullCurveData integrate_null(const std::array<RF, 3>& forms) {
    NullCurveData f;
    for (size_t j = 0; j < 3; ++j) {
        auto h = hermite_reduce(forms[j]);
        if (!h.residues_vanish()) {
            std::string places;
            for (const auto& [num, den] : h.remainder) {
                if (!places.empty()) places += ", ";
                places += poly_to_string(den);
            }
            throw Error("nonvanishing residues in component " + std::to_string(j + 1) +
                        " at places of " + places);
        }
        f.components[j] = h.rational_part;
    }
    return f;
}

namespace {

std::optional<EndProfile> profile_at_place(const std::array<RF, 3>& comps, const P& place) {
    int m = 0;
    std::array<int, 3> orders{};
    for (size_t j = 0; j < 3; ++j) {
        orders[j] = comps[j].is_zero() ? 0 : -comps[j].ord_at(place);
        m = std::max(m, orders[j]);
    }
    if (m <= 0) return std::nullopt;
    EndProfile e;
    e.place = place;
    e.multiplicity = m;
    // leading Laurent vector modulo the place: A0_j = num_j * (den_j / place^m)^-1
    for (size_t j = 0; j < 3; ++j) {
        if (orders[j] < m || comps[j].is_zero()) {
            e.leading_vector.push_back(P());
            continue;
        }
        P unit = comps[j].den();
        for (int k = 0; k < m; ++k) unit = unit / place;
        auto [g, inv_unit, cof] = xgcd(divmod(unit, place).second, place);
        (void)cof;
        if (g.degree() != 0) throw Error("internal error: non-invertible unit at pole place");
        P a0 = divmod(comps[j].num() * inv_unit, place).second;
        e.leading_vector.push_back(a0);
    }
    e.embedded = (m == 1);
    e.log_growth = TowerElement(rat(0)); // rational data admit no log term
    e.planar = e.embedded;
    // isotropy of the leading vector modulo the place
    P iso;
    for (const auto& a : e.leading_vector) iso += a * a;
    if (!divmod(iso, place).second.is_zero())
        throw Error("internal error: leading end vector is not isotropic");
    return e;
}

} // namespace

std::vector<EndProfile> classify_ends(const NullCurveData& f) {
    std::vector<P> raw;
    for (const auto& c : f.components) {
        if (c.is_zero()) continue;
        for (const auto& [fac, mult] : squarefree_decomposition(c.den())) raw.push_back(fac);
    }
    std::vector<EndProfile> out;
    for (const P& place : refine_places(std::move(raw))) {
        auto e = profile_at_place(f.components, place);
        if (e) out.push_back(std::move(*e));
    }
    // the end at infinity on the w = 1/z model
    bool pole_at_inf = false;
    for (const auto& c : f.components)
        if (!c.is_zero() && c.ord_at_infinity() < 0) pole_at_inf = true;
    if (pole_at_inf) {
        std::array<RF, 3> inv{at_inverse(f.components[0]), at_inverse(f.components[1]),
                              at_inverse(f.components[2])};
        auto e = profile_at_place(inv, zpow(1));
        if (e) {
            e->at_infinity = true;
            e->place = P();
            out.push_back(std::move(*e));
        }
    }
    return out;
}

EndProductTest end_product_test(const NullCurveData& f) {
    EndProductTest t;
    P l(TowerElement(rat(1)));
    for (const auto& c : f.components)
        if (!c.is_zero()) l = lcm_poly(l, c.den());
    P radical(TowerElement(rat(1)));
    for (const auto& [fac, mult] : squarefree_decomposition(l)) radical *= fac;
    t.radical = radical;
    t.polynomial = true;
    int deg = -1;
    for (size_t j = 0; j < 3; ++j) {
        RF fj = f.components[j] * RF(radical);
        if (!fj.is_polynomial()) {
            if (t.polynomial) {
                t.polynomial = false;
                t.witness_component = static_cast<int>(j) + 1;
                t.surviving_denominator = fj.den();
            }
        } else {
            deg = std::max(deg, fj.num().degree());
        }
    }
    if (t.polynomial) t.degree = deg;
    return t;
}

CompletedNullCurve complete_null_curve(const NullCurveData& f) {
    RF null_sum;
    for (const auto& c : f.components) {
        RF d = c.derivative();
        null_sum += d * d;
    }
    if (!null_sum.is_zero()) throw Error("curve is not null");
    RF ss = f.components[0] * f.components[0] + f.components[1] * f.components[1] +
            f.components[2] * f.components[2];
    P d(TowerElement(rat(1)));
    for (const auto& c : f.components)
        if (!c.is_zero()) d = lcm_poly(d, c.den());
    if (!ss.is_zero()) d = lcm_poly(d, ss.den());
    std::vector<P> coords;
    coords.push_back(d);
    for (const auto& c : f.components) {
        RF cleared = c * RF(d);
        if (!cleared.is_polynomial()) throw Error("internal error: denominator clearing failed");
        coords.push_back(cleared.num() * cleared.den().leading().inv());
    }
    RF s4 = ss * RF(d);
    if (!s4.is_polynomial()) throw Error("internal error: denominator clearing failed");
    coords.push_back(s4.num() * s4.den().leading().inv());
    CompletedNullCurve out;
    out.curve = normalize_projective(std::move(coords));
    P quad = out.curve.coords[0] * out.curve.coords[4] - out.curve.coords[1] * out.curve.coords[1] -
             out.curve.coords[2] * out.curve.coords[2] - out.curve.coords[3] * out.curve.coords[3];
    out.on_quadric = quad.is_zero();
    out.r1 = ramification_r1(out.curve);
    out.unbranched = out.r1.is_zero();
    long poles = 0;
    for (const auto& e : classify_ends(f))
        poles += static_cast<long>(e.multiplicity) * (e.at_infinity ? 1 : e.place.degree());
    out.pole_divisor_degree = poles;
    return out;
}

CurvatureReport curvature_and_jorge_meeks(const WeierstrassData& w, int genus, long end_count) {
    CurvatureReport r;
    r.gauss_degree = std::max(w.gauss.num().degree(), w.gauss.den().degree());
    r.total_curvature_quarter = r.gauss_degree;
    r.genus = genus;
    r.end_count = end_count;
    r.jorge_meeks_consistent = (r.gauss_degree == genus - 1 + end_count);
    return r;
}

std::pair<ProjectiveCurve, SymplecticStructure> fd_family(int d) {
    if (d < 2) throw Error("fd family requires d >= 2");
    std::vector<P> coords = {P(TowerElement(rat(-1, 2 * d - 1))), zpow(d - 1), zpow(d),
                             zpow(2 * d - 1)};
    return {normalize_projective(std::move(coords)), standard_contact_structure()};
}

KusnerFamily kusner_family(int n) {
    if (n < 2) throw Error("kusner family requires n >= 2");
    KusnerFamily k;
    TowerElement radicand(rat(2L * n - 1));
    TowerPtr t;
    if (auto root = radicand.exact_sqrt()) {
        k.s = *root;
        t = Tower::rationals();
    } else {
        t = Tower::rationals()->extend_sqrt(radicand);
        k.s = TowerElement::generator(t, 0);
    }
    k.r = k.s * 2 / TowerElement(rat(n - 1));
    TowerPtr ct = t->complexify();
    TowerElement i = TowerElement::imaginary(ct);
    P gnum = zpow(n - 1) * (zpow(n) - P(k.s));
    P gden = P::monomial(k.s, n) + P(1);
    P rr = zpow(2 * n) + P::monomial(k.r, n) - P(1);
    k.end_polynomial = rr;
    k.r_squarefree = gcd_monic(rr, rr.derivative()).degree() == 0;
    k.data.gauss = RF(gnum, gden);
    k.data.form = RF(P(i) * gden * gden, rr * rr);
    // closed form (i/R) (z^(2n-1) - z, -i (z^(2n-1) + z), ((n-1)/n)(z^(2n) + 1))
    P a = zpow(2 * n - 1) - zpow(1);
    P b = zpow(2 * n - 1) + zpow(1);
    P c = (zpow(2 * n) + P(1)) * TowerElement(rat(n - 1, n));
    k.closed_form.components = {RF(P(i) * a, rr), RF(b, rr), RF(P(i) * c, rr)};
    return k;
}

PengParams peng_default_params() {
    TowerPtr t1 = Tower::rationals()->extend_sqrt(TowerElement(rat(15)));
    TowerElement s15_low = TowerElement::generator(t1, 0);
    TowerPtr t2 = t1->extend_sqrt(s15_low * 215208 + 833497);
    TowerElement s15 = TowerElement::generator(t2, 0);
    TowerElement w = TowerElement::generator(t2, 1);
    PengParams p;
    p.a = (s15 * 488 - w * 3 + 1890) / ((s15 * 8 + 31) * 3);
    p.b = -(s15 * w * 9 - s15 * 8983 + w * 33 - 34791) /
          ((s15 * w * 5 - s15 * 6747 + w * 21 - 26131) * 3);
    p.c = -(s15 * 7 + 27) / (s15 + 5);
    p.lambda = -(s15 * 8) - 31;
    return p;
}

WeierstrassData peng_family(int n, int m, const PengParams& p) {
    if (n < 4) throw Error("peng family requires n >= 4");
    if (m < 2 || m > n - 1) throw Error("peng family requires 2 <= m <= n-1");
    if (2 * m == n + 1) throw Error("peng family requires 2m != n+1");
    std::vector<TowerElement> params = {p.a, p.b, p.c, p.lambda};
    for (size_t i = 0; i < params.size(); ++i) {
        if (params[i] == TowerElement(rat(0)) || params[i] == TowerElement(rat(1)))
            throw Error("peng parameters must avoid 0 and 1");
        for (size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j]) throw Error("peng parameters must be pairwise distinct");
    }
    WeierstrassData w;
    w.gauss = RF((zpow(n) - P(p.a)) * (zpow(n) - P(p.b)), zpow(m) * (zpow(n) - P(p.c)));
    P znc = zpow(n) - P(p.c);
    P zn1 = zpow(n) - P(1);
    P znl = zpow(n) - P(p.lambda);
    w.form = RF(zpow(2 * m - 2) * znc * znc, zn1 * zn1 * znl * znl);
    return w;
}

PengRefutation refute_peng(int n, int m) {
    PengParams p = peng_default_params();
    WeierstrassData w = peng_family(n, m, p);
    PengRefutation out;
    out.n = n;
    out.m = m;
    out.fully_supported = (n == 4 && m == 2);
    out.omega_order_at_zero = w.form.ord_at(zpow(1));
    out.required_order = 2 * m;
    out.order_mismatch = out.omega_order_at_zero != out.required_order;
    auto forms = forms_from_data(w);
    auto rr = residues_vanish(forms);
    out.component_residues_vanish = rr.component_vanishes;
    out.refuted = out.order_mismatch || !rr.all_vanish;
    if (!out.fully_supported) return out;

    // third component: f3 = int 2 g omega, F3 = f3 * z (z^n - 1)(z^n - lambda)
    auto h3 = hermite_reduce(forms[2]);
    if (h3.residues_vanish()) {
        RF f3 = h3.rational_part;
        P zn1 = zpow(n) - P(1);
        P znl = zpow(n) - P(p.lambda);
        RF big_f3 = f3 * RF(zpow(1) * zn1 * znl);
        // express as -(2/3) z^2 (z^4 - lambda) P/Q with P and Q sharing every
        // coefficient except the constant term
        RF pq = big_f3 * RF(P(TowerElement(rat(-3, 2)))) / RF(zpow(2) * znl);
        P pnum = pq.num(), qden = pq.den();
        // transcribed constants of the displayed P and Q
        TowerPtr t2 = p.a.tower();
        TowerElement s15 = TowerElement::generator(t2, 0);
        TowerElement ww = TowerElement::generator(t2, 1);
        TowerElement ptop_paper = s15 * ww * 699302 - s15 * 905413342 + ww * 2708385 - 3506650795;
        TowerElement p0_paper =
            -(s15 * ww * 4264614) + s15 * 5521560662L - ww * 16516779 + 21384912489L;
        TowerElement q0_paper =
            s15 * ww * 43345442 - s15 * 56121019962L + ww * 167876175 - 217355775685L;
        bool ok = qden.degree() == 4 && pnum.degree() == 4 && !qden.coeff(0).is_zero();
        if (ok) {
            TowerElement alpha = q0_paper / qden.coeff(0);
            P pp = pnum * alpha, qq = qden * alpha;
            bool shared = true;
            for (int k = 1; k <= 4; ++k) shared = shared && pp.coeff(k) == qq.coeff(k);
            ok = shared && pp.coeff(4) == ptop_paper && pp.coeff(0) == p0_paper &&
                 !(pp.coeff(0) == qq.coeff(0));
            out.p_constant = pp.coeff(0);
            out.q_constant = qq.coeff(0);
            out.pq_shared_top = pp.coeff(4);
        }
        out.f3_exact_match = ok;
    }
    if (rr.all_vanish) {
        NullCurveData f = integrate_null(forms);
        auto t = end_product_test(f);
        out.not_polynomial = !t.polynomial;
        out.witness_component = t.witness_component;
    }
    return out;
}

} // namespace kleinq
