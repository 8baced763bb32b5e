#pragma once

#include "kleinq/poly.hpp"

namespace kleinq {

/// Reduced rational function over a field: den monic and nonzero,
/// gcd(num, den) = 1.
template <class K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(K(1)) {}
    RationalFunction(const Poly<K>& p) : num_(p), den_(K(1)) {} // NOLINT
    RationalFunction(const K& c) : num_(Poly<K>(c)), den_(K(1)) {}
    RationalFunction(long c) : num_(Poly<K>(K(c))), den_(K(1)) {}
    RationalFunction(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    Poly<K> polynomial() const {
        if (!is_polynomial()) throw Error("rational function is not a polynomial");
        return num_;
    }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw Error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K eval(const K& x) const { return num_.eval(x) * den_.eval(x).inv(); }

    /// Order of vanishing along a monic squarefree place (negative at poles).
    int ord_at(const Poly<K>& place) const {
        if (is_zero()) throw Error("infinite order: zero function");
        return ord_at_place(num_, place) - ord_at_place(den_, place);
    }
    /// Order of vanishing at infinity of the affine function: deg den - deg num.
    int ord_at_infinity() const {
        if (is_zero()) throw Error("infinite order: zero function");
        return den_.degree() - num_.degree();
    }

private:
    void reduce() {
        if (den_.is_zero()) throw Error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = gcd_monic(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K s = den_.leading().inv();
        num_ = num_ * s;
        den_ = den_ * s;
    }

    Poly<K> num_, den_;
};

/// Hermite reduction: f = d/dz(rational_part) + remainder where the remainder
/// has a squarefree denominator (simple poles only). The remainder is empty
/// iff f is the derivative of a rational function iff all residues vanish.
template <class K>
struct HermiteResult {
    RationalFunction<K> rational_part;
    std::vector<std::pair<Poly<K>, Poly<K>>> remainder; // (num, squarefree monic den)

    bool residues_vanish() const { return remainder.empty(); }
    RationalFunction<K> remainder_function() const {
        RationalFunction<K> r;
        for (const auto& [n, d] : remainder) r += RationalFunction<K>(n, d);
        return r;
    }
};

template <class K>
HermiteResult<K> hermite_reduce(const RationalFunction<K>& f) {
    HermiteResult<K> out;
    auto [q, r] = divmod(f.num(), f.den());
    // polynomial part integrates to a polynomial
    if (!q.is_zero()) {
        std::vector<K> anti(static_cast<size_t>(q.degree()) + 2, K(0));
        for (int i = 0; i <= q.degree(); ++i)
            anti[static_cast<size_t>(i) + 1] = q.coeff(i) * K(static_cast<long>(i) + 1).inv();
        out.rational_part += RationalFunction<K>(Poly<K>(std::move(anti)));
    }
    Poly<K> num = r, den = f.den();
    for (;;) {
        if (num.is_zero()) return out;
        auto sqf = squarefree_decomposition(den);
        int k = 0;
        Poly<K> vfac;
        for (const auto& [fac, mult] : sqf) {
            if (mult > k) {
                k = mult;
                vfac = fac;
            }
        }
        if (k <= 1) {
            out.remainder.emplace_back(num, den);
            return out;
        }
        Poly<K> vpow(K(1));
        for (int i = 0; i < k; ++i) vpow *= vfac;
        Poly<K> u = den / vpow;
        // solve B*(u*v') + C*v = num with deg B < deg v
        Poly<K> s = u * vfac.derivative();
        auto [g, inv_s, cofac] = xgcd(s, vfac);
        (void)cofac;
        if (g.degree() != 0) throw Error("hermite: unexpected common factor");
        Poly<K> b = divmod(num * inv_s, vfac).second;
        Poly<K> c = (num - b * s) / vfac;
        Poly<K> vlow(K(1));
        for (int i = 0; i < k - 1; ++i) vlow *= vfac;
        K scale = K(static_cast<long>(k) - 1).inv();
        out.rational_part += RationalFunction<K>(-(b * scale), vlow);
        num = c + u * b.derivative() * scale;
        den = u * vlow;
        RationalFunction<K> reduced(num, den);
        num = reduced.num();
        den = reduced.den();
    }
}

} // namespace kleinq
