#include "kleinq/param_ring.hpp"

#include <algorithm>
#include <numeric>

namespace kleinq {

ParamRingPtr ParamRing::make(std::vector<std::string> names) {
    return ParamRingPtr(new ParamRing(std::move(names)));
}

int ParamRing::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

bool ParamPoly::GradedLex::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ParamPoly::ParamPoly(const Rational& c) {
    if (sgn(c) != 0) terms_[Monomial{}] = c;
}

ParamPoly ParamPoly::variable(const ParamRingPtr& ring, size_t index) {
    if (!ring || index >= ring->arity()) throw Error("parameter index out of range");
    ParamPoly p;
    p.ring_ = ring;
    Monomial m(ring->arity(), 0);
    m[index] = 1;
    p.terms_[m] = 1;
    return p;
}

ParamPoly ParamPoly::constant(const ParamRingPtr& ring, const Rational& c) {
    ParamPoly p;
    p.ring_ = ring;
    if (sgn(c) != 0) p.terms_[Monomial(ring ? ring->arity() : 0, 0)] = c;
    return p;
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

Rational ParamPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("parameter polynomial is not constant");
    return terms_.begin()->second;
}

std::pair<ParamRingPtr, bool> ParamPoly::join(const ParamPoly& a, const ParamPoly& b) {
    if (a.ring_ && b.ring_ && a.ring_ != b.ring_)
        throw Error("mixing distinct parameter rings");
    ParamRingPtr r = a.ring_ ? a.ring_ : b.ring_;
    return {r, true};
}

ParamPoly ParamPoly::aligned_to(const ParamRingPtr& r) const {
    if (ring_ == r || !r) return *this;
    ParamPoly out;
    out.ring_ = r;
    for (const auto& [m, c] : terms_) {
        Monomial mm(r->arity(), 0);
        std::copy(m.begin(), m.end(), mm.begin());
        out.terms_[mm] = c;
    }
    return out;
}

void ParamPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (sgn(it->second) == 0) it = terms_.erase(it);
        else ++it;
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    auto [ring, ok] = ParamPoly::join(a, b);
    ParamPoly x = a.aligned_to(ring), y = b.aligned_to(ring);
    ParamPoly out = x;
    out.ring_ = ring;
    for (const auto& [m, c] : y.terms_) {
        auto it = out.terms_.find(m);
        if (it == out.terms_.end()) out.terms_[m] = c;
        else it->second += c;
    }
    out.prune();
    return out;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    auto [ring, ok] = ParamPoly::join(a, b);
    ParamPoly x = a.aligned_to(ring), y = b.aligned_to(ring);
    ParamPoly out;
    out.ring_ = ring;
    for (const auto& [ma, ca] : x.terms_) {
        for (const auto& [mb, cb] : y.terms_) {
            ParamPoly::Monomial m(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) out.terms_[m] = ca * cb;
            else it->second += ca * cb;
        }
    }
    out.prune();
    return out;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
    auto [ring, ok] = ParamPoly::join(a, b);
    ParamPoly x = a.aligned_to(ring), y = b.aligned_to(ring);
    return x.terms_ == y.terms_;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // graded-lex descending for display
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = sgn(c) < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        Rational a = abs(c);
        std::string vars;
        for (size_t i = 0; i < m.size(); ++i) {
            for (unsigned e = 0; e < m[i]; ++e) {
                if (!vars.empty()) vars += "*";
                vars += ring_->name(i);
            }
        }
        if (vars.empty()) s += rational_literal(a);
        else if (a == 1) s += vars;
        else s += rational_literal(a) + "*" + vars;
    }
    return s;
}

} // namespace kleinq
