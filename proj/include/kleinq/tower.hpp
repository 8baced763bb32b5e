#pragma once

#include "kleinq/rational.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace kleinq {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// An exact number in a tower of real quadratic extensions of Q, optionally
/// complexified by adjoining i on top. Coordinates are rationals in the
/// multiplicative basis of radical products; an element is zero iff all
/// coordinates are zero (guaranteed by the non-square radicand invariant).
class TowerElement {
public:
    TowerElement(); // rational zero
    TowerElement(const Rational& r);
    TowerElement(long n) : TowerElement(Rational(n)) {}
    TowerElement(int n) : TowerElement(Rational(n)) {}
    TowerElement(TowerPtr tower, std::vector<Rational> coords);

    static TowerElement zero(const TowerPtr& t);
    static TowerElement one(const TowerPtr& t);
    /// The generator sqrt(radicand of `level`) as an element of `t`.
    static TowerElement generator(const TowerPtr& t, int level);
    /// The imaginary unit; `t` must be complexified.
    static TowerElement imaginary(const TowerPtr& t);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    TowerElement operator-() const;
    friend TowerElement operator+(const TowerElement&, const TowerElement&);
    friend TowerElement operator-(const TowerElement&, const TowerElement&);
    friend TowerElement operator*(const TowerElement&, const TowerElement&);
    friend TowerElement operator/(const TowerElement&, const TowerElement&);
    TowerElement& operator+=(const TowerElement& o) { return *this = *this + o; }
    TowerElement& operator-=(const TowerElement& o) { return *this = *this - o; }
    TowerElement& operator*=(const TowerElement& o) { return *this = *this * o; }
    TowerElement& operator/=(const TowerElement& o) { return *this = *this / o; }
    friend bool operator==(const TowerElement&, const TowerElement&);
    friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

    TowerElement inv() const; // throws on zero

    TowerElement real_part() const;
    TowerElement imag_part() const; // coefficient of i
    TowerElement conjugate() const; // complex conjugation (identity on real towers)

    /// Sign of a real element: 0 iff zero, else +-1 by adaptive-precision
    /// interval refinement (start 64 bits, double on failure).
    int sign() const;

    /// Certified dyadic interval [lo, hi] containing the (real) value with
    /// width <= 2^-precision_bits * max(1, |x|).
    std::pair<Rational, Rational> approximate(unsigned precision_bits) const;

    /// Square root in the same tower, if one exists there; nonnegative branch.
    std::optional<TowerElement> exact_sqrt() const;

    /// Exact literal in the textual number grammar.
    std::string to_string() const;

    /// Certified decimal rendering with `sig` significant digits.
    std::string decimal(int sig = 15) const;
    std::string scientific(int sig = 3) const;

private:
    TowerPtr tower_;
    std::vector<Rational> coords_;
};

/// Immutable descriptor of a tower Q(sqrt(r_0), ..., sqrt(r_{k-1}))[i].
/// Level k's radicand is an element over levels < k, strictly positive and
/// not a square there.
class Tower : public std::enable_shared_from_this<Tower> {
public:
    static TowerPtr rationals();
    TowerPtr extend_sqrt(const TowerElement& radicand) const; // throws if invalid
    TowerPtr complexify() const;

    int levels() const { return levels_; }
    bool complexified() const { return complexified_; }
    const TowerPtr& base() const { return base_; } // one fewer level (or de-complexified)
    const TowerElement& radicand() const;          // of the top level
    TowerPtr real_tower() const;                   // this without the i level
    size_t coord_count() const;

    static bool same(const TowerPtr& a, const TowerPtr& b);
    /// True iff `sub`'s levels are a prefix of `super`'s and the i-flag embeds.
    static bool embeds(const TowerPtr& sub, const TowerPtr& super);
    /// Deepest of the two if one embeds into the other; throws otherwise.
    static TowerPtr join(const TowerPtr& a, const TowerPtr& b);

private:
    Tower() = default;
    TowerPtr base_;
    std::optional<TowerElement> radicand_;
    int levels_ = 0;
    bool complexified_ = false;
};

} // namespace kleinq
