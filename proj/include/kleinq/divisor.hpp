#pragma once

#include "kleinq/poly.hpp"
#include "kleinq/tower.hpp"

#include <string>
#include <vector>

namespace kleinq {

using FieldPoly = Poly<TowerElement>;

/// Formal integer combination of places on P^1: monic squarefree finite
/// places plus the point at infinity. Adding places with common factors
/// refines by gcd splitting, so stored places stay pairwise coprime and
/// divisor equality is plain structural equality of the refinement.
class Divisor {
public:
    Divisor() = default;

    void add_place(const FieldPoly& place, long mult); // place monic squarefree
    void add_infinity(long mult) { infinity_ += mult; }

    static Divisor of_polynomial(const FieldPoly& p); // squarefree-decomposition divisor

    Divisor& operator+=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b);
    Divisor scaled(long k) const;

    long infinity_mult() const { return infinity_; }
    const std::vector<std::pair<FieldPoly, long>>& finite() const { return finite_; }
    long degree() const;
    bool is_zero() const { return finite_.empty() && infinity_ == 0; }
    bool all_nonnegative() const;
    friend bool operator==(const Divisor& a, const Divisor& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

    /// Multiplicity at the rational point z = c (0 if not a branch place).
    long multiplicity_at(const TowerElement& c) const;

    std::string to_string() const;

private:
    void canonicalize();
    std::vector<std::pair<FieldPoly, long>> finite_;
    long infinity_ = 0;
};

std::string poly_to_string(const FieldPoly& p); // exact literal coefficients, "z" variable

} // namespace kleinq
