#include "kleinq/tower.hpp"

#include "kleinq/interval.hpp"

#include <algorithm>
#include <cassert>

namespace kleinq {

namespace {

using Coords = std::vector<Rational>;

bool all_zero(const Coords& c, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
        if (sgn(c[i]) != 0) return false;
    return true;
}

Coords slice(const Coords& c, size_t begin, size_t end) {
    return Coords(c.begin() + begin, c.begin() + end);
}

// ---- recursive kernels over real towers (coords size = 2^levels) ----

Coords add_real(const Coords& a, const Coords& b) {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Coords neg_real(const Coords& a) {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

// Coordinates of the top radicand of `t`, promoted to size 2^(levels-1).
Coords radicand_coords(const Tower* t) {
    const TowerElement& rad = t->radicand();
    size_t half = t->coord_count() / 2;
    Coords r(half, Rational(0));
    const Coords& rc = rad.coords();
    std::copy(rc.begin(), rc.end(), r.begin());
    return r;
}

Coords mul_real(const Tower* t, const Coords& a, const Coords& b) {
    if (a.size() == 1) return {a[0] * b[0]};
    size_t h = a.size() / 2;
    const Tower* base = t->base().get();
    Coords a0 = slice(a, 0, h), a1 = slice(a, h, a.size());
    Coords b0 = slice(b, 0, h), b1 = slice(b, h, b.size());
    Coords p00 = mul_real(base, a0, b0);
    Coords p11 = mul_real(base, a1, b1);
    Coords p01 = mul_real(base, a0, b1);
    Coords p10 = mul_real(base, a1, b0);
    Coords low = add_real(p00, mul_real(base, p11, radicand_coords(t)));
    Coords high = add_real(p01, p10);
    low.insert(low.end(), high.begin(), high.end());
    return low;
}

Coords inv_real(const Tower* t, const Coords& a) {
    if (a.size() == 1) {
        if (sgn(a[0]) == 0) throw Error("division by zero");
        return {Rational(1) / a[0]};
    }
    size_t h = a.size() / 2;
    const Tower* base = t->base().get();
    Coords a0 = slice(a, 0, h), a1 = slice(a, h, a.size());
    // (a0 + a1 sqrt(r))^-1 = (a0 - a1 sqrt(r)) / (a0^2 - a1^2 r);
    // the norm is nonzero for nonzero input since r is not a square below.
    Coords norm = add_real(mul_real(base, a0, a0),
                           neg_real(mul_real(base, mul_real(base, a1, a1), radicand_coords(t))));
    Coords ninv = inv_real(base, norm);
    Coords low = mul_real(base, a0, ninv);
    Coords high = mul_real(base, neg_real(a1), ninv);
    low.insert(low.end(), high.begin(), high.end());
    return low;
}

Interval eval_real(const Tower* t, const Coords& a, mpfr_prec_t prec) {
    if (a.size() == 1) return Interval::of(a[0], prec);
    size_t h = a.size() / 2;
    const Tower* base = t->base().get();
    Interval i0 = eval_real(base, slice(a, 0, h), prec);
    if (all_zero(a, h, a.size())) return i0;
    Interval i1 = eval_real(base, slice(a, h, a.size()), prec);
    const Coords& rc = t->radicand().coords();
    Interval ir = eval_real(t->radicand().tower().get(), rc, prec);
    return i0 + i1 * ir.sqrt_nonneg();
}

} // namespace

// ---- Tower ----

TowerPtr Tower::rationals() {
    static TowerPtr q = [] {
        auto t = new Tower();
        return TowerPtr(t);
    }();
    return q;
}

const TowerElement& Tower::radicand() const {
    if (!radicand_) throw Error("tower has no radical level here");
    return *radicand_;
}

TowerPtr Tower::real_tower() const {
    if (!complexified_) return shared_from_this();
    return base_;
}

size_t Tower::coord_count() const {
    return (size_t{1} << levels_) << (complexified_ ? 1 : 0);
}

TowerPtr Tower::extend_sqrt(const TowerElement& radicand) const {
    if (complexified_) throw Error("cannot extend a complexified tower by a real radical");
    TowerPtr self = shared_from_this();
    if (!Tower::embeds(radicand.tower(), self))
        throw Error("radicand does not live in the tower being extended");
    TowerElement rad = TowerElement::zero(self) + radicand; // promote
    if (rad.sign() <= 0) throw Error("radicand must be strictly positive");
    if (rad.exact_sqrt()) throw Error("radicand is already a square in the tower");
    auto t = new Tower();
    t->base_ = self;
    t->radicand_ = rad;
    t->levels_ = levels_ + 1;
    return TowerPtr(t);
}

TowerPtr Tower::complexify() const {
    if (complexified_) return shared_from_this();
    auto t = new Tower();
    t->base_ = shared_from_this();
    t->levels_ = levels_;
    t->complexified_ = true;
    return TowerPtr(t);
}

bool Tower::same(const TowerPtr& a, const TowerPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->levels_ != b->levels_ || a->complexified_ != b->complexified_) return false;
    if (a->complexified_) return same(a->base_, b->base_);
    if (a->levels_ == 0) return true;
    return same(a->base_, b->base_) && a->radicand() == b->radicand();
}

bool Tower::embeds(const TowerPtr& sub, const TowerPtr& super) {
    if (sub->complexified() && !super->complexified()) return false;
    TowerPtr s = sub->real_tower();
    TowerPtr t = super->real_tower();
    if (s->levels() > t->levels()) return false;
    while (t->levels() > s->levels()) t = t->base();
    return same(s, t);
}

TowerPtr Tower::join(const TowerPtr& a, const TowerPtr& b) {
    if (embeds(a, b)) return b;
    if (embeds(b, a)) return a;
    // one may need just the i-flag of the other
    if (a->complexified() != b->complexified()) {
        TowerPtr ra = a->real_tower(), rb = b->real_tower();
        if (embeds(ra, rb)) return rb->complexify();
        if (embeds(rb, ra)) return ra->complexify();
    }
    throw Error("incompatible towers: no canonical embedding");
}

// ---- TowerElement ----

TowerElement::TowerElement() : tower_(Tower::rationals()), coords_{Rational(0)} {}

TowerElement::TowerElement(const Rational& r) : tower_(Tower::rationals()), coords_{r} {}

TowerElement::TowerElement(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
    if (coords_.size() != tower_->coord_count())
        throw Error("coordinate vector size does not match the tower");
}

TowerElement TowerElement::zero(const TowerPtr& t) {
    return TowerElement(t, Coords(t->coord_count(), Rational(0)));
}

TowerElement TowerElement::one(const TowerPtr& t) {
    Coords c(t->coord_count(), Rational(0));
    c[0] = 1;
    return TowerElement(t, std::move(c));
}

TowerElement TowerElement::generator(const TowerPtr& t, int level) {
    if (level < 0 || level >= t->levels()) throw Error("no such tower level");
    Coords c(t->coord_count(), Rational(0));
    c[size_t{1} << level] = 1;
    return TowerElement(t, std::move(c));
}

TowerElement TowerElement::imaginary(const TowerPtr& t) {
    if (!t->complexified()) throw Error("tower is not complexified");
    Coords c(t->coord_count(), Rational(0));
    c[t->coord_count() / 2] = 1;
    return TowerElement(t, std::move(c));
}

bool TowerElement::is_zero() const { return all_zero(coords_, 0, coords_.size()); }

bool TowerElement::is_rational() const { return all_zero(coords_, 1, coords_.size()); }

Rational TowerElement::rational_value() const {
    if (!is_rational()) throw Error("element is not rational");
    return coords_[0];
}

namespace {

// Promote coords of `e` into `target` (which e's tower embeds into).
Coords promote(const TowerElement& e, const TowerPtr& target) {
    const TowerPtr& from = e.tower();
    if (Tower::same(from, target)) return e.coords();
    Coords out(target->coord_count(), Rational(0));
    size_t from_real = size_t{1} << from->levels();
    size_t to_real = size_t{1} << target->levels();
    for (size_t i = 0; i < from_real; ++i) out[i] = e.coords()[i];
    if (from->complexified()) {
        for (size_t i = 0; i < from_real; ++i) out[to_real + i] = e.coords()[from_real + i];
    }
    return out;
}

struct Aligned {
    TowerPtr tower;
    Coords a, b;
};

Aligned align(const TowerElement& x, const TowerElement& y) {
    TowerPtr t = Tower::join(x.tower(), y.tower());
    return {t, promote(x, t), promote(y, t)};
}

} // namespace

TowerElement TowerElement::operator-() const {
    return TowerElement(tower_, neg_real(coords_));
}

TowerElement operator+(const TowerElement& x, const TowerElement& y) {
    Aligned al = align(x, y);
    return TowerElement(al.tower, add_real(al.a, al.b));
}

TowerElement operator-(const TowerElement& x, const TowerElement& y) {
    Aligned al = align(x, y);
    return TowerElement(al.tower, add_real(al.a, neg_real(al.b)));
}

TowerElement operator*(const TowerElement& x, const TowerElement& y) {
    Aligned al = align(x, y);
    if (!al.tower->complexified())
        return TowerElement(al.tower, mul_real(al.tower.get(), al.a, al.b));
    const Tower* rt = al.tower->real_tower().get();
    size_t h = al.a.size() / 2;
    Coords xr = slice(al.a, 0, h), xi = slice(al.a, h, al.a.size());
    Coords yr = slice(al.b, 0, h), yi = slice(al.b, h, al.b.size());
    Coords re = add_real(mul_real(rt, xr, yr), neg_real(mul_real(rt, xi, yi)));
    Coords im = add_real(mul_real(rt, xr, yi), mul_real(rt, xi, yr));
    re.insert(re.end(), im.begin(), im.end());
    return TowerElement(al.tower, std::move(re));
}

TowerElement TowerElement::inv() const {
    if (is_zero()) throw Error("division by zero");
    if (!tower_->complexified()) return TowerElement(tower_, inv_real(tower_.get(), coords_));
    const Tower* rt = tower_->real_tower().get();
    size_t h = coords_.size() / 2;
    Coords re = slice(coords_, 0, h), im = slice(coords_, h, coords_.size());
    // (re + im i)^-1 = (re - im i) / (re^2 + im^2); the norm is a nonzero
    // element of the (formally real) tower below.
    Coords norm = add_real(mul_real(rt, re, re), mul_real(rt, im, im));
    Coords ninv = inv_real(rt, norm);
    Coords low = mul_real(rt, re, ninv);
    Coords high = mul_real(rt, neg_real(im), ninv);
    low.insert(low.end(), high.begin(), high.end());
    return TowerElement(tower_, std::move(low));
}

TowerElement operator/(const TowerElement& x, const TowerElement& y) { return x * y.inv(); }

bool operator==(const TowerElement& x, const TowerElement& y) {
    Aligned al = align(x, y);
    for (size_t i = 0; i < al.a.size(); ++i)
        if (al.a[i] != al.b[i]) return false;
    return true;
}

TowerElement TowerElement::real_part() const {
    if (!tower_->complexified()) return *this;
    size_t h = coords_.size() / 2;
    return TowerElement(tower_->real_tower(), slice(coords_, 0, h));
}

TowerElement TowerElement::imag_part() const {
    if (!tower_->complexified()) return TowerElement::zero(tower_);
    size_t h = coords_.size() / 2;
    return TowerElement(tower_->real_tower(), slice(coords_, h, coords_.size()));
}

TowerElement TowerElement::conjugate() const {
    if (!tower_->complexified()) return *this;
    size_t h = coords_.size() / 2;
    Coords c = coords_;
    for (size_t i = h; i < c.size(); ++i) c[i] = -c[i];
    return TowerElement(tower_, std::move(c));
}

int TowerElement::sign() const {
    if (tower_->complexified()) {
        if (!imag_part().is_zero()) throw Error("sign of a non-real element");
        return real_part().sign();
    }
    if (is_zero()) return 0;
    if (is_rational()) return sgn(coords_[0]);
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        int s = eval_real(tower_.get(), coords_, prec).certified_sign();
        if (s != 0) return s;
    }
}

std::pair<Rational, Rational> TowerElement::approximate(unsigned precision_bits) const {
    if (tower_->complexified()) {
        if (!imag_part().is_zero()) throw Error("approximate of a non-real element");
        return real_part().approximate(precision_bits);
    }
    if (is_zero()) return {Rational(0), Rational(0)};
    if (precision_bits < 1) throw Error("precision_bits must be >= 1");
    Rational tol(1);
    for (unsigned i = 0; i < precision_bits; ++i) tol /= 2;
    for (mpfr_prec_t prec = std::max<mpfr_prec_t>(64, precision_bits + 16);; prec *= 2) {
        Interval iv = eval_real(tower_.get(), coords_, prec);
        Rational lo = iv.lo_rational(), hi = iv.hi_rational();
        Rational lb(0); // certified lower bound on |x|
        if (sgn(lo) > 0) lb = lo;
        else if (sgn(hi) < 0) lb = -hi;
        Rational bound = tol * std::max(Rational(1), lb);
        if (hi - lo <= bound) return {lo, hi};
    }
}

std::optional<TowerElement> TowerElement::exact_sqrt() const {
    if (tower_->complexified()) throw Error("exact_sqrt requires a real tower");
    if (is_zero()) return TowerElement::zero(tower_);
    int sg = sign();
    if (sg < 0) return std::nullopt;
    if (tower_->levels() == 0) {
        auto r = rational_sqrt(coords_[0]);
        if (!r) return std::nullopt;
        return TowerElement(*r);
    }
    size_t h = coords_.size() / 2;
    TowerPtr base = tower_->base();
    TowerElement c(base, slice(coords_, 0, h));
    TowerElement d(base, slice(coords_, h, coords_.size()));
    TowerElement r = tower_->radicand();
    auto lift = [&](const TowerElement& e, const TowerElement& f) {
        Coords out = promote(e, base);
        Coords high = promote(f, base);
        out.insert(out.end(), high.begin(), high.end());
        TowerElement y(tower_, std::move(out));
        return y.sign() < 0 ? -y : y;
    };
    if (d.is_zero()) {
        if (auto e = c.exact_sqrt()) return lift(*e, TowerElement::zero(base));
        if (auto f = (c / r).exact_sqrt()) return lift(TowerElement::zero(base), *f);
        return std::nullopt;
    }
    // (e + f sqrt(r))^2 = c + d sqrt(r):  e^2 = (c +- s)/2 with s^2 = c^2 - d^2 r.
    auto s = (c * c - d * d * r).exact_sqrt();
    if (!s) return std::nullopt;
    for (int branch = 0; branch < 2; ++branch) {
        TowerElement e2 = branch == 0 ? (c + *s) / 2 : (c - *s) / 2;
        auto e = e2.exact_sqrt();
        if (!e || e->is_zero()) continue;
        TowerElement f = d / (*e * 2);
        TowerElement y = lift(*e, f);
        if (y * y == *this) return y;
    }
    return std::nullopt;
}

namespace {

std::string radical_product_string(const TowerPtr& t, size_t index) {
    std::string s;
    size_t real_count = size_t{1} << t->levels();
    bool imag = index >= real_count;
    size_t bits = imag ? index - real_count : index;
    TowerPtr rt = t->real_tower();
    std::vector<std::string> factors;
    // walk down the chain collecting radicands for set bits
    std::vector<TowerPtr> chain;
    for (TowerPtr p = rt; p->levels() > 0; p = p->base()) chain.push_back(p);
    std::reverse(chain.begin(), chain.end()); // chain[j] has level j+1
    for (int j = 0; j < rt->levels(); ++j) {
        if (bits & (size_t{1} << j))
            factors.push_back("sqrt(" + chain[size_t(j)]->radicand().to_string() + ")");
    }
    if (imag) factors.push_back("i");
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "*";
        s += factors[i];
    }
    return s;
}

} // namespace

std::string TowerElement::to_string() const {
    std::string s;
    bool any = false;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (sgn(coords_[i]) == 0) continue;
        Rational c = coords_[i];
        bool neg = sgn(c) < 0;
        if (!any) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        Rational a = abs(c);
        std::string rad = radical_product_string(tower_, i);
        if (rad.empty()) {
            s += rational_literal(a);
        } else if (a == 1) {
            s += rad;
        } else {
            s += rational_literal(a) + "*" + rad;
        }
        any = true;
    }
    if (!any) return "0";
    return s;
}

std::string TowerElement::decimal(int sig) const {
    if (tower_->complexified() && !imag_part().is_zero()) {
        TowerElement re = real_part(), im = imag_part();
        std::string s = re.is_zero() ? "" : re.decimal(sig);
        std::string it = im.decimal(sig);
        if (!s.empty() && it[0] != '-') s += "+";
        return s + it + "i";
    }
    TowerElement re = tower_->complexified() ? real_part() : *this;
    if (re.is_rational()) return rational_decimal(re.rational_value(), sig);
    for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = re.approximate(bits);
        std::string a = rational_decimal(lo, sig), b = rational_decimal(hi, sig);
        if (a == b) return a;
    }
}

std::string TowerElement::scientific(int sig) const {
    if (is_rational()) return rational_scientific(rational_value(), sig);
    for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = approximate(bits);
        std::string a = rational_scientific(lo, sig), b = rational_scientific(hi, sig);
        if (a == b) return a;
    }
}

} // namespace kleinq
