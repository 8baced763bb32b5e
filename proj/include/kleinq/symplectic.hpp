#pragma once

#include "kleinq/curve.hpp"

#include <string>
#include <vector>

namespace kleinq {

/// Non-degenerate symplectic form beta on C^4 with its induced volume
/// pairing Omega = (1/2) beta^2 on Lambda^2 C^4 (Pluecker coordinates in the
/// lexicographic pair order 01,02,03,12,13,23), the deterministic
/// reduced-echelon basis of beta-perp, and the restricted quadric form.
struct SymplecticStructure {
    Mat beta;                    // 4x4 antisymmetric, det != 0
    TowerElement pfaffian;       // Pf(beta)
    std::vector<Vec> perp_basis; // 5 vectors of length 6
    Mat quadric;                 // 5x5 symmetric restriction of <.,.> to beta-perp
};

SymplecticStructure make_symplectic(const Mat& beta);
/// beta = xi0 ^ xi3 + xi1 ^ xi2.
SymplecticStructure standard_contact_structure();

/// Pull-back structure for the coordinate change x -> m x (beta transforms by
/// m^-T beta m^-1), so contact curves stay contact under linear_transform.
SymplecticStructure transformed_structure(const SymplecticStructure& s, const Mat& m);

/// beta(F, F') == 0 as a polynomial identity; curve must live in P^3.
bool is_contact(const ProjectiveCurve& f, const SymplecticStructure& s);

/// The Klein dual: f_2 expressed in beta-perp coordinates, a non-degenerate
/// null curve in the quadric of s. Throws if f is not contact or is linear.
ProjectiveCurve klein_dual(const ProjectiveCurve& f, const SymplecticStructure& s);

/// Value of the restricted quadric on a coordinate vector of polynomials.
FieldPoly quadric_value(const SymplecticStructure& s, const std::vector<FieldPoly>& g);
bool is_null_in_quadric(const ProjectiveCurve& g, const SymplecticStructure& s);

/// Inverse Klein correspondence: the unique contact curve f in P^3 with
/// f_2 = g, via the fraction-free kernel of v ^ W = v ^ W' = 0 for the
/// lifted bivector W. Throws when the image lies in a line.
ProjectiveCurve inverse_klein(const ProjectiveCurve& g, const SymplecticStructure& s);

struct PlueckerReport {
    long r1 = 0, r2 = 0;
    int deg_f = 0, deg_f2 = 0;
    bool r2_even = false;
    bool deg_f_identity = false;  // deg f = 3 + r1 + r2/2
    bool deg_f2_identity = false; // deg f2 = 4 + r1 + r2
    bool r1_eq_r3 = false;        // R_1(f) = R_3(f)
    bool dual_r1_r4 = false;      // R_1(f_2) = R_4(f_2) = R_2(f)
    bool dual_r2_r3 = false;      // R_2(f_2) = R_3(f_2) = R_1(f)
    bool totally_ramified = false;
    Divisor r1_divisor, r2_divisor;
    std::vector<std::string> violations;
    bool all_hold() const { return violations.empty(); }
};

PlueckerReport plucker_report(const ProjectiveCurve& f, const SymplecticStructure& s);

} // namespace kleinq
