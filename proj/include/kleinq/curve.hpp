#pragma once

#include "kleinq/divisor.hpp"
#include "kleinq/linalg.hpp"

#include <vector>

namespace kleinq {

/// Holomorphic map P^1 -> P^n as a primitive polynomial coordinate vector
/// (content 1, non-constant).
struct ProjectiveCurve {
    std::vector<FieldPoly> coords;
    int degree = 0;
    int ambient_dim() const { return static_cast<int>(coords.size()) - 1; }
};

/// Divides out the content, records the degree, rejects all-zero and
/// constant maps.
ProjectiveCurve normalize_projective(std::vector<FieldPoly> raw);

/// The k-th associated curve [F ^ F' ^ ... ^ F^(k-1)], primitivized, in
/// lexicographic Pluecker coordinates; ambient C(n+1, k) - 1.
ProjectiveCurve associated_curve(const ProjectiveCurve& f, int k);

/// True iff the coefficient matrix has full column rank n+1.
bool is_nondegenerate(const ProjectiveCurve& f);

/// The i-th ramification divisor R_i (1 <= i <= n), from orders of the
/// unnormalized wedge contents; the infinity place is handled on the
/// degree-d homogeneous model (substitution w = 1/z).
Divisor ramification_divisor(const ProjectiveCurve& f, int i);
std::vector<Divisor> ramification_divisors(const ProjectiveCurve& f); // R_1..R_n

/// R_1 alone, needing only the order-2 wedge (works for curves that may be
/// degenerate at higher osculating levels).
Divisor ramification_r1(const ProjectiveCurve& f);

/// Degrees of the associated curves f_1..f_n (projective degrees).
std::vector<int> associated_degrees(const ProjectiveCurve& f);

/// Equality in P^n: all 2x2 minors of the stacked coordinate vectors vanish.
bool projectively_equal(const ProjectiveCurve& a, const ProjectiveCurve& b);

/// Precomposition with the Moebius map z -> (az + b)/(cz + d), ad - bc != 0.
ProjectiveCurve mobius_transform(const ProjectiveCurve& f, const TowerElement& a,
                                 const TowerElement& b, const TowerElement& c,
                                 const TowerElement& d);

/// Composition with an invertible constant linear map of the ambient space.
ProjectiveCurve linear_transform(const ProjectiveCurve& f, const Mat& m);

/// Direct Taylor-matrix oracle: the strictly increasing vanishing orders
/// ord_p(h_0) < ... < ord_p(h_n) of an adapted basis at the point z = p,
/// computed by incremental column reduction of the Taylor coefficient matrix.
std::vector<int> vanishing_orders_at(const ProjectiveCurve& f, const TowerElement& p);

} // namespace kleinq
