#pragma once

#include "kleinq/rational_function.hpp"
#include "kleinq/symplectic.hpp"

#include <array>
#include <optional>

namespace kleinq {

using RF = RationalFunction<TowerElement>;

/// Weierstrass data: Gauss map g and the dz-coefficient of the 1-form omega.
struct WeierstrassData {
    RF gauss;
    RF form;
};

/// The C^3-valued 1-form coefficients ((1-g^2) w, i (1+g^2) w, 2 g w).
std::array<RF, 3> forms_from_data(const WeierstrassData& w);

/// phi_1^2 + phi_2^2 + phi_3^2 == 0 exactly.
bool verify_null(const std::array<RF, 3>& forms);

struct ResidueReport {
    bool all_vanish = false;
    std::array<bool, 3> component_vanishes{};
    std::vector<FieldPoly> offending_places; // squarefree denominators of remainders
};
ResidueReport residues_vanish(const std::array<RF, 3>& forms);

/// Meromorphic null curve f = (f1, f2, f3) with rational components.
struct NullCurveData {
    std::array<RF, 3> components;
};

/// Exact rational antiderivatives (integration constants zero); errors if
/// any residue is nonzero, naming the places.
NullCurveData integrate_null(const std::array<RF, 3>& forms);

struct EndProfile {
    bool at_infinity = false;
    FieldPoly place; // monic squarefree; meaningful when !at_infinity
    int multiplicity = 0;
    std::vector<FieldPoly> leading_vector; // A0 mod place (constants at rational places)
    TowerElement log_growth;               // identically zero for rational data
    bool embedded = false;
    bool planar = false;
};
std::vector<EndProfile> classify_ends(const NullCurveData& f);

struct EndProductTest {
    bool polynomial = false;
    int degree = -1;
    int witness_component = -1;   // when not polynomial
    FieldPoly surviving_denominator;
    FieldPoly radical;            // the product Pi over the finite poles
};
EndProductTest end_product_test(const NullCurveData& f);

struct CompletedNullCurve {
    ProjectiveCurve curve; // [1, f, <f,f>] with denominators cleared, in P^4
    bool on_quadric = false;   // X0 X4 - X1^2 - X2^2 - X3^2 == 0
    Divisor r1;
    bool unbranched = false;
    long pole_divisor_degree = 0; // number of poles with multiplicity
};
CompletedNullCurve complete_null_curve(const NullCurveData& f);

struct CurvatureReport {
    int gauss_degree = 0;
    long total_curvature_quarter = 0; // C(phi) = -4 pi * this
    int genus = 0;
    long end_count = 0;
    bool jorge_meeks_consistent = false; // deg g = genus - 1 + n
};
CurvatureReport curvature_and_jorge_meeks(const WeierstrassData& w, int genus, long end_count);

/// The totally ramified contact curve [-(1/(2d-1)), z^(d-1), z^d, z^(2d-1)]
/// with its symplectic form xi0^xi3 + xi1^xi2; d >= 2.
std::pair<ProjectiveCurve, SymplecticStructure> fd_family(int d);

struct KusnerFamily {
    WeierstrassData data;
    NullCurveData closed_form;
    TowerElement s; // sqrt(2n-1)
    TowerElement r; // 2 s / (n-1)
    FieldPoly end_polynomial; // R = z^(2n) + r z^n - 1
    bool r_squarefree = false; // gcd(R, R') = 1
};
KusnerFamily kusner_family(int n); // n >= 2

struct PengParams {
    TowerElement a, b, c, lambda;
};
PengParams peng_default_params();

WeierstrassData peng_family(int n, int m, const PengParams& p);

struct PengRefutation {
    int n = 0, m = 0;
    bool fully_supported = false; // (4, 2) runs the complete argument
    // order mismatch at 0: omega vanishes to order 2m-2 < 2m
    int omega_order_at_zero = 0;
    int required_order = 0;
    bool order_mismatch = false;
    // component-by-component residue outcome at the default parameters
    std::array<bool, 3> component_residues_vanish{};
    // third-component witness: F3 = -(2/3) z^2 (z^4 - lambda) P/Q with
    // P - Q a nonzero constant; constant terms of P and Q as exact values
    bool f3_exact_match = false; // P(0), Q(0), z^4-coefficient match their transcriptions
    TowerElement p_constant, q_constant, pq_shared_top;
    bool not_polynomial = false; // end-product test fails
    int witness_component = -1;
    bool refuted = false;
};
PengRefutation refute_peng(int n, int m);

} // namespace kleinq
