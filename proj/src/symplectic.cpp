#include "kleinq/symplectic.hpp"

#include "kleinq/wedge.hpp"

namespace kleinq {

namespace {

const std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Levi-Civita pairing on Lambda^2: (e_a^e_b) ^ (e_c^e_d) = eps * e0^e1^e2^e3.
int epsilon_pairing(int i, int j) {
    auto [a, b] = kPairs[static_cast<size_t>(i)];
    auto [c, d] = kPairs[static_cast<size_t>(j)];
    int perm[4] = {a, b, c, d};
    bool seen[4] = {false, false, false, false};
    for (int x : perm) {
        if (seen[x]) return 0;
        seen[x] = true;
    }
    int sign = 1;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
            if (perm[x] > perm[y]) sign = -sign;
    return sign;
}

Vec beta_functional(const Mat& beta) {
    Vec row(6, TowerElement());
    for (size_t k = 0; k < 6; ++k) {
        auto [i, j] = kPairs[k];
        row[k] = beta[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return row;
}

} // namespace

SymplecticStructure make_symplectic(const Mat& beta) {
    if (beta.size() != 4 || beta[0].size() != 4) throw Error("beta must be 4x4");
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if (!(beta[i][j] + beta[j][i]).is_zero()) throw Error("beta must be antisymmetric");
    Vec b = beta_functional(beta);
    TowerElement pf = b[0] * b[5] - b[1] * b[4] + b[2] * b[3];
    if (pf.is_zero()) throw Error("beta is degenerate");
    SymplecticStructure s;
    s.beta = beta;
    s.pfaffian = pf;
    s.perp_basis = kernel_of_row(b);
    // volume pairing on Lambda^2 and its restriction to beta-perp
    Mat pairing = zero_matrix(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            pairing[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                pf * TowerElement(rat(epsilon_pairing(i, j)));
    Mat pb = zero_matrix(6, 5);
    for (size_t c = 0; c < 5; ++c)
        for (size_t r = 0; r < 6; ++r) pb[r][c] = s.perp_basis[c][r];
    s.quadric = mat_mul(transpose(pb), mat_mul(pairing, pb));
    return s;
}

SymplecticStructure standard_contact_structure() {
    Mat beta = zero_matrix(4, 4);
    beta[0][3] = TowerElement(rat(1));
    beta[3][0] = TowerElement(rat(-1));
    beta[1][2] = TowerElement(rat(1));
    beta[2][1] = TowerElement(rat(-1));
    return make_symplectic(beta);
}

SymplecticStructure transformed_structure(const SymplecticStructure& s, const Mat& m) {
    Mat minv = inverse4(m);
    return make_symplectic(mat_mul(transpose(minv), mat_mul(s.beta, minv)));
}

namespace {

std::vector<FieldPoly> wedge2(const ProjectiveCurve& f) { return wedge_minors(f.coords, 2); }

FieldPoly beta_applied(const SymplecticStructure& s, const std::vector<FieldPoly>& w2) {
    Vec b = beta_functional(s.beta);
    FieldPoly acc;
    for (size_t k = 0; k < 6; ++k) {
        if (b[k].is_zero()) continue;
        acc += w2[k] * b[k];
    }
    return acc;
}

} // namespace

bool is_contact(const ProjectiveCurve& f, const SymplecticStructure& s) {
    if (f.ambient_dim() != 3) throw Error("contact curves live in P^3");
    return beta_applied(s, wedge2(f)).is_zero();
}

FieldPoly quadric_value(const SymplecticStructure& s, const std::vector<FieldPoly>& g) {
    if (g.size() != 5) throw Error("quadric form takes 5 coordinates");
    FieldPoly acc;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) {
            if (s.quadric[i][j].is_zero()) continue;
            acc += g[i] * g[j] * s.quadric[i][j];
        }
    return acc;
}

bool is_null_in_quadric(const ProjectiveCurve& g, const SymplecticStructure& s) {
    if (g.ambient_dim() != 4) throw Error("null curves of the correspondence live in P^4");
    std::vector<FieldPoly> d;
    d.reserve(5);
    for (const auto& p : g.coords) d.push_back(p.derivative());
    return quadric_value(s, g.coords).is_zero() && quadric_value(s, d).is_zero();
}

ProjectiveCurve klein_dual(const ProjectiveCurve& f, const SymplecticStructure& s) {
    if (f.degree < 2) throw Error("klein dual requires a non-linear curve");
    if (!is_contact(f, s)) throw Error("curve is not contact for this symplectic form");
    ProjectiveCurve f2 = associated_curve(f, 2);
    // express the primitive wedge in perp coordinates: with the echelon basis,
    // the free-row coordinates are read off directly
    size_t pivot = 0;
    Vec b = beta_functional(s.beta);
    while (pivot < 6 && b[pivot].is_zero()) ++pivot;
    std::vector<FieldPoly> g;
    std::vector<size_t> free_rows;
    for (size_t r = 0; r < 6; ++r)
        if (r != pivot) free_rows.push_back(r);
    for (size_t j = 0; j < 5; ++j) g.push_back(f2.coords[free_rows[j]]);
    // consistency at the pivot row
    FieldPoly lift_pivot;
    for (size_t j = 0; j < 5; ++j) {
        const TowerElement& c = s.perp_basis[j][pivot];
        if (!c.is_zero()) lift_pivot += g[j] * c;
    }
    if (!(lift_pivot == f2.coords[pivot]))
        throw Error("internal error: wedge does not lie in beta-perp");
    ProjectiveCurve dual = normalize_projective(std::move(g));
    if (!is_null_in_quadric(dual, s))
        throw Error("internal error: klein dual is not null in the quadric");
    if (is_nondegenerate(f) && !is_nondegenerate(dual))
        throw Error("internal error: dual of a non-degenerate contact curve is degenerate");
    return dual;
}

ProjectiveCurve inverse_klein(const ProjectiveCurve& g, const SymplecticStructure& s) {
    if (g.ambient_dim() != 4) throw Error("inverse klein input lives in P^4");
    if (!is_null_in_quadric(g, s))
        throw Error("input is not a null curve in the quadric of this structure");
    // lift to Lambda^2 coordinates
    std::vector<FieldPoly> w(6);
    for (size_t r = 0; r < 6; ++r) {
        FieldPoly acc;
        for (size_t j = 0; j < 5; ++j) {
            const TowerElement& c = s.perp_basis[j][r];
            if (!c.is_zero()) acc += g.coords[j] * c;
        }
        w[r] = acc;
    }
    std::vector<FieldPoly> wd(6);
    for (size_t r = 0; r < 6; ++r) wd[r] = w[r].derivative();
    // rows of the linear system v ^ W = 0, v ^ W' = 0 over the triples abc
    auto rows_of = [&](const std::vector<FieldPoly>& biv) {
        // coordinate of pair (x,y) with x < y
        auto at = [&](int x, int y) -> const FieldPoly& {
            for (size_t k = 0; k < 6; ++k)
                if (kPairs[k].first == x && kPairs[k].second == y) return biv[k];
            throw Error("bad pair");
        };
        std::vector<std::array<FieldPoly, 4>> rows;
        const int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        for (auto [a, b2, c] : triples) {
            std::array<FieldPoly, 4> row;
            row[static_cast<size_t>(a)] = at(b2, c);
            row[static_cast<size_t>(b2)] = -at(a, c);
            row[static_cast<size_t>(c)] = at(a, b2);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    std::vector<std::array<FieldPoly, 4>> m = rows_of(w);
    for (auto& r : rows_of(wd)) m.push_back(std::move(r));
    // kernel vector from signed 3x3 minors of a generically rank-3 row triple
    for (size_t i = 0; i < m.size(); ++i) {
        for (size_t j = i + 1; j < m.size(); ++j) {
            for (size_t k = j + 1; k < m.size(); ++k) {
                std::vector<FieldPoly> cand(4);
                bool nonzero = false;
                for (int drop = 0; drop < 4; ++drop) {
                    std::vector<int> cols;
                    for (int c = 0; c < 4; ++c)
                        if (c != drop) cols.push_back(c);
                    FieldPoly det;
                    // 3x3 determinant of rows i,j,k and columns cols
                    const std::array<FieldPoly, 4>* rr[3] = {&m[i], &m[j], &m[k]};
                    for (int t = 0; t < 3; ++t) {
                        FieldPoly sub = (*rr[1])[static_cast<size_t>(cols[(t + 1) % 3])] *
                                            (*rr[2])[static_cast<size_t>(cols[(t + 2) % 3])] -
                                        (*rr[1])[static_cast<size_t>(cols[(t + 2) % 3])] *
                                            (*rr[2])[static_cast<size_t>(cols[(t + 1) % 3])];
                        det += (*rr[0])[static_cast<size_t>(cols[t])] * sub;
                    }
                    // kernel of a rank-3 3x4 system is ((-1)^j det(minus col j))_j
                    if (drop % 2 == 1) det = -det;
                    if (!det.is_zero()) nonzero = true;
                    cand[static_cast<size_t>(drop)] = det;
                }
                if (!nonzero) continue;
                bool annihilates = true;
                for (const auto& row : m) {
                    FieldPoly acc;
                    for (size_t c = 0; c < 4; ++c) acc += row[c] * cand[c];
                    if (!acc.is_zero()) {
                        annihilates = false;
                        break;
                    }
                }
                if (!annihilates) continue;
                ProjectiveCurve f = normalize_projective(std::move(cand));
                ProjectiveCurve check = klein_dual(f, s);
                if (!projectively_equal(check, g))
                    throw Error("internal error: inverse klein roundtrip mismatch");
                return f;
            }
        }
    }
    throw Error("image contained in a line: inverse klein kernel is not one-dimensional");
}

PlueckerReport plucker_report(const ProjectiveCurve& f, const SymplecticStructure& s) {
    if (f.degree < 2) throw Error("pluecker report requires a non-linear curve");
    if (!is_contact(f, s)) throw Error("curve is not contact for this symplectic form");
    PlueckerReport rep;
    auto rs = ramification_divisors(f); // R_1..R_3
    ProjectiveCurve f2 = klein_dual(f, s);
    auto rs2 = ramification_divisors(f2); // R_1..R_4 of the dual
    rep.r1 = rs[0].degree();
    rep.r2 = rs[1].degree();
    rep.deg_f = f.degree;
    rep.deg_f2 = f2.degree;
    rep.r1_divisor = rs[0];
    rep.r2_divisor = rs[1];
    auto check = [&](bool ok, const std::string& label) {
        if (!ok) rep.violations.push_back(label);
        return ok;
    };
    rep.r2_even = check(rep.r2 % 2 == 0, "r2 even");
    rep.deg_f_identity =
        check(2L * rep.deg_f == 6L + 2L * rep.r1 + rep.r2, "deg f = 3 + r1 + r2/2");
    rep.deg_f2_identity =
        check(rep.deg_f2 == 4L + rep.r1 + rep.r2, "deg f2 = 4 + r1 + r2");
    rep.r1_eq_r3 = check(rs[0] == rs[2], "R1(f) = R3(f)");
    rep.dual_r1_r4 =
        check(rs2[0] == rs2[3] && rs2[0] == rs[1], "R1(f2) = R4(f2) = R2(f)");
    rep.dual_r2_r3 =
        check(rs2[1] == rs2[2] && rs2[1] == rs[0], "R2(f2) = R3(f2) = R1(f)");
    rep.totally_ramified = rep.r2 == 0 && rep.r1 == rep.deg_f - 3;
    return rep;
}

} // namespace kleinq
