#pragma once

#include "kleinq/rational.hpp"

#include <utility>
#include <vector>

namespace kleinq {

/// Dense univariate polynomial over a coefficient ring K (ascending
/// coefficients, no stored trailing zeros; the zero polynomial is empty,
/// degree -1). K must be default-constructible to zero, constructible from
/// long, and provide + - * ==, unary -, and is_zero().
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(const K& constant) { // NOLINT: implicit by design
        c_.push_back(constant);
        strip();
    }
    Poly(long constant) : Poly(K(constant)) {}
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }
    /// c * z^k
    static Poly monomial(const K& c, int k) {
        std::vector<K> v(static_cast<size_t>(k) + 1, K(0));
        v.back() = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<size_t>(i)];
    }
    const K& leading() const { return c_.back(); } // nonzero poly only

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<K> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const K& s) { return a * Poly(s); }
    friend Poly operator*(const K& s, const Poly& a) { return a * Poly(s); }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// P(z + c)
    Poly shift(const K& c) const {
        Poly result;
        Poly pw(K(1));
        Poly lin(std::vector<K>{c, K(1)});
        for (size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) result += pw * c_[i];
            if (i + 1 < c_.size()) pw *= lin;
        }
        return result;
    }

    /// z^n * P(1/z) for n >= degree.
    Poly reversed(int n) const {
        std::vector<K> r(static_cast<size_t>(n) + 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(n) - i] = c_[i];
        return Poly(std::move(r));
    }

    /// Lowest exponent with nonzero coefficient (valuation at z); -1 for zero.
    int low_order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    /// P / z^k, requiring z^k | P.
    Poly shift_down(int k) const {
        if (is_zero()) return Poly();
        if (low_order() < k) throw Error("shift_down: polynomial not divisible by z^k");
        return Poly(std::vector<K>(c_.begin() + k, c_.end()));
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

// ---- field-only algorithms (K must additionally provide inv()) ----

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    Poly<K> q, r = a;
    K lead_inv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        K c = r.leading() * lead_inv;
        Poly<K> t = Poly<K>::monomial(c, k);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

template <class K>
Poly<K> make_monic(const Poly<K>& a) {
    if (a.is_zero()) return a;
    return a * a.leading().inv();
}

template <class K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
    a = make_monic(a);
    b = make_monic(b);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = make_monic(r);
    }
    return a;
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> xgcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0(K(1)), u1, v0, v1(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    K s = r0.leading().inv();
    return {r0 * s, u0 * s, v0 * s};
}

/// Yun squarefree decomposition: a = lc * prod factor_i ^ mult_i with monic,
/// squarefree, pairwise coprime factors. Characteristic zero.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& a) {
    if (a.is_zero()) throw Error("squarefree decomposition of zero");
    std::vector<std::pair<Poly<K>, int>> out;
    Poly<K> f = make_monic(a);
    if (f.degree() == 0) return out;
    Poly<K> g = gcd_monic(f, f.derivative());
    Poly<K> c = f / g;
    Poly<K> d = f.derivative() / g - c.derivative();
    for (int i = 1; !(c.degree() == 0); ++i) {
        Poly<K> p = gcd_monic(c, d);
        if (p.degree() > 0) out.emplace_back(p, i);
        c = c / p;
        d = d / p - c.derivative();
    }
    return out;
}

/// Order of vanishing of `a` along a monic squarefree `place`; a != 0.
template <class K>
int ord_at_place(const Poly<K>& a, const Poly<K>& place) {
    if (a.is_zero()) throw Error("infinite order: zero polynomial");
    if (place.degree() < 1) throw Error("place must be non-constant");
    int n = 0;
    Poly<K> r = a;
    for (;;) {
        auto [q, rem] = divmod(r, place);
        if (!rem.is_zero()) return n;
        ++n;
        r = q;
    }
}

/// Monic gcd of a family (content of a coordinate vector over a field).
template <class K>
Poly<K> content(const std::vector<Poly<K>>& v) {
    Poly<K> g;
    for (const auto& p : v) g = gcd_monic(g, p);
    return g;
}

} // namespace kleinq
