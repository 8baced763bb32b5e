#include "kleinq/curve.hpp"

#include "kleinq/wedge.hpp"

namespace kleinq {

ProjectiveCurve normalize_projective(std::vector<FieldPoly> raw) {
    bool any = false;
    for (const auto& p : raw) any = any || !p.is_zero();
    if (!any) throw Error("all coordinates are zero");
    FieldPoly g = content(raw);
    if (g.degree() > 0)
        for (auto& p : raw) p = p / g;
    int deg = 0;
    for (const auto& p : raw) deg = std::max(deg, p.degree());
    if (deg < 1) throw Error("constant map is not a projective curve");
    return ProjectiveCurve{std::move(raw), deg};
}

namespace {

// Unnormalized wedge T_k of the primitive coordinate vector; error when it
// vanishes identically (curve not generically of rank k).
std::vector<FieldPoly> wedge_or_throw(const std::vector<FieldPoly>& coords, int k) {
    auto t = wedge_minors(coords, k);
    for (const auto& p : t)
        if (!p.is_zero()) return t;
    throw Error("degenerate derivative flag: wedge of order " + std::to_string(k) +
                " vanishes identically");
}

std::vector<FieldPoly> reversed_model(const ProjectiveCurve& f) {
    std::vector<FieldPoly> rev;
    rev.reserve(f.coords.size());
    for (const auto& p : f.coords) rev.push_back(p.reversed(f.degree));
    return rev;
}

} // namespace

ProjectiveCurve associated_curve(const ProjectiveCurve& f, int k) {
    if (k < 1 || k > f.ambient_dim()) throw Error("associated curve order out of range");
    if (k == 1) return f;
    return normalize_projective(wedge_or_throw(f.coords, k));
}

bool is_nondegenerate(const ProjectiveCurve& f) {
    size_t n1 = f.coords.size();
    Mat m(static_cast<size_t>(f.degree) + 1, Vec(n1, TowerElement()));
    for (size_t j = 0; j < n1; ++j)
        for (int i = 0; i <= f.coords[j].degree(); ++i)
            m[static_cast<size_t>(i)][j] = f.coords[j].coeff(i);
    return rank(std::move(m)) == static_cast<int>(n1);
}

std::vector<Divisor> ramification_divisors(const ProjectiveCurve& f) {
    int n = f.ambient_dim();
    // finite contents g_k and infinity orders m_k of the wedges, k = 0..n+1
    std::vector<FieldPoly> g(static_cast<size_t>(n) + 2, FieldPoly(TowerElement(rat(1))));
    std::vector<int> m(static_cast<size_t>(n) + 2, 0);
    auto rev = reversed_model(f);
    for (int k = 2; k <= n + 1; ++k) {
        g[static_cast<size_t>(k)] = content(wedge_or_throw(f.coords, k));
        auto rev_wedge = wedge_minors(rev, k);
        int low = -1;
        for (const auto& p : rev_wedge) {
            if (p.is_zero()) continue;
            int l = p.low_order();
            if (low < 0 || l < low) low = l;
        }
        if (low < 0) throw Error("degenerate derivative flag at infinity model");
        m[static_cast<size_t>(k)] = low;
    }
    std::vector<Divisor> out;
    for (int i = 1; i <= n; ++i) {
        Divisor r = Divisor::of_polynomial(g[static_cast<size_t>(i + 1)]);
        r += Divisor::of_polynomial(g[static_cast<size_t>(i)]).scaled(-2);
        r += Divisor::of_polynomial(g[static_cast<size_t>(i - 1)]);
        r.add_infinity(m[static_cast<size_t>(i + 1)] - 2 * m[static_cast<size_t>(i)] +
                       m[static_cast<size_t>(i - 1)]);
        if (!r.all_nonnegative())
            throw Error("internal error: negative ramification multiplicity");
        out.push_back(std::move(r));
    }
    return out;
}

Divisor ramification_divisor(const ProjectiveCurve& f, int i) {
    if (i < 1 || i > f.ambient_dim()) throw Error("ramification index out of range");
    return ramification_divisors(f)[static_cast<size_t>(i - 1)];
}

Divisor ramification_r1(const ProjectiveCurve& f) {
    Divisor r = Divisor::of_polynomial(content(wedge_or_throw(f.coords, 2)));
    auto rev_wedge = wedge_minors(reversed_model(f), 2);
    int low = -1;
    for (const auto& p : rev_wedge) {
        if (p.is_zero()) continue;
        int l = p.low_order();
        if (low < 0 || l < low) low = l;
    }
    if (low < 0) throw Error("degenerate derivative flag at infinity model");
    r.add_infinity(low);
    return r;
}

std::vector<int> associated_degrees(const ProjectiveCurve& f) {
    std::vector<int> out;
    out.push_back(f.degree);
    for (int k = 2; k <= f.ambient_dim(); ++k) out.push_back(associated_curve(f, k).degree);
    return out;
}

bool projectively_equal(const ProjectiveCurve& a, const ProjectiveCurve& b) {
    if (a.coords.size() != b.coords.size()) return false;
    for (size_t i = 0; i < a.coords.size(); ++i)
        for (size_t j = i + 1; j < a.coords.size(); ++j)
            if (!(a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]).is_zero()) return false;
    return true;
}

ProjectiveCurve mobius_transform(const ProjectiveCurve& f, const TowerElement& a,
                                 const TowerElement& b, const TowerElement& c,
                                 const TowerElement& d) {
    if ((a * d - b * c).is_zero()) throw Error("moebius map is singular");
    FieldPoly lin_num(std::vector<TowerElement>{b, a}); // a z + b
    FieldPoly lin_den(std::vector<TowerElement>{d, c}); // c z + d
    int deg = f.degree;
    std::vector<FieldPoly> pn(static_cast<size_t>(deg) + 1), pd(static_cast<size_t>(deg) + 1);
    pn[0] = FieldPoly(TowerElement(rat(1)));
    pd[0] = FieldPoly(TowerElement(rat(1)));
    for (int i = 1; i <= deg; ++i) {
        pn[static_cast<size_t>(i)] = pn[static_cast<size_t>(i - 1)] * lin_num;
        pd[static_cast<size_t>(i)] = pd[static_cast<size_t>(i - 1)] * lin_den;
    }
    std::vector<FieldPoly> out;
    out.reserve(f.coords.size());
    for (const auto& p : f.coords) {
        FieldPoly q;
        for (int k = 0; k <= p.degree(); ++k) {
            if (p.coeff(k).is_zero()) continue;
            q += pn[static_cast<size_t>(k)] * pd[static_cast<size_t>(deg - k)] * p.coeff(k);
        }
        out.push_back(q);
    }
    return normalize_projective(std::move(out));
}

ProjectiveCurve linear_transform(const ProjectiveCurve& f, const Mat& m) {
    if (m.size() != f.coords.size()) throw Error("matrix size mismatch");
    std::vector<FieldPoly> out(f.coords.size());
    for (size_t i = 0; i < m.size(); ++i) {
        FieldPoly q;
        for (size_t j = 0; j < f.coords.size(); ++j) {
            if (m[i][j].is_zero()) continue;
            q += f.coords[j] * m[i][j];
        }
        out[i] = q;
    }
    return normalize_projective(std::move(out));
}

std::vector<int> vanishing_orders_at(const ProjectiveCurve& f, const TowerElement& p) {
    size_t n1 = f.coords.size();
    std::vector<FieldPoly> shifted;
    shifted.reserve(n1);
    for (const auto& c : f.coords) shifted.push_back(c.shift(p));
    // incremental row reduction of the Taylor coefficient matrix; a row that
    // raises the rank contributes its order to the adapted-basis sequence
    std::vector<int> orders;
    Mat reduced;
    std::vector<size_t> pivot_cols;
    int max_order = (f.degree + 1) * static_cast<int>(n1) + 1;
    for (int r = 0; r < max_order && orders.size() < n1; ++r) {
        Vec row(n1, TowerElement());
        for (size_t j = 0; j < n1; ++j) row[j] = shifted[j].coeff(r);
        for (size_t k = 0; k < reduced.size(); ++k) {
            TowerElement factor = row[pivot_cols[k]];
            if (factor.is_zero()) continue;
            for (size_t j = 0; j < n1; ++j) row[j] = row[j] - factor * reduced[k][j];
        }
        size_t pivot = n1;
        for (size_t j = 0; j < n1; ++j) {
            if (!row[j].is_zero()) {
                pivot = j;
                break;
            }
        }
        if (pivot == n1) continue;
        TowerElement inv = row[pivot].inv();
        for (size_t j = 0; j < n1; ++j) row[j] = row[j] * inv;
        reduced.push_back(std::move(row));
        pivot_cols.push_back(pivot);
        orders.push_back(r);
    }
    if (orders.size() < n1)
        throw Error("curve is degenerate: adapted basis orders do not exist");
    return orders;
}

} // namespace kleinq
