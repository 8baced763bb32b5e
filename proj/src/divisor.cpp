#include "kleinq/divisor.hpp"

#include <algorithm>

namespace kleinq {

std::string poly_to_string(const FieldPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        TowerElement c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (s.empty()) {
            if (neg) {
                s += "-";
                cs = cs.substr(1);
            }
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        bool simple = cs.find_first_of("+-*/ ") == std::string::npos;
        std::string coeff = simple ? cs : "(" + cs + ")";
        if (i == 0) s += coeff;
        else {
            std::string zp = i == 1 ? "z" : "z^" + std::to_string(i);
            s += (coeff == "1") ? zp : coeff + "*" + zp;
        }
    }
    return s;
}

void Divisor::add_place(const FieldPoly& place, long mult) {
    if (mult == 0 || place.degree() < 1) return;
    FieldPoly rest = make_monic(place);
    std::vector<std::pair<FieldPoly, long>> updated;
    for (auto& [q, n] : finite_) {
        if (rest.degree() < 1) {
            updated.emplace_back(q, n);
            continue;
        }
        FieldPoly g = gcd_monic(rest, q);
        if (g.degree() < 1) {
            updated.emplace_back(q, n);
            continue;
        }
        FieldPoly qrem = q / g;
        if (qrem.degree() > 0) updated.emplace_back(qrem, n);
        updated.emplace_back(g, n + mult);
        rest = rest / g;
    }
    if (rest.degree() > 0) updated.emplace_back(rest, mult);
    finite_ = std::move(updated);
    canonicalize();
}

void Divisor::canonicalize() {
    std::erase_if(finite_, [](const auto& e) { return e.second == 0; });
    std::sort(finite_.begin(), finite_.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return poly_to_string(a.first) < poly_to_string(b.first);
    });
}

Divisor Divisor::of_polynomial(const FieldPoly& p) {
    Divisor d;
    for (const auto& [fac, mult] : squarefree_decomposition(p)) d.add_place(fac, mult);
    return d;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [p, m] : o.finite_) add_place(p, m);
    infinity_ += o.infinity_;
    return *this;
}

Divisor operator-(Divisor a, const Divisor& b) {
    for (const auto& [p, m] : b.finite()) a.add_place(p, -m);
    a.add_infinity(-b.infinity_mult());
    return a;
}

Divisor Divisor::scaled(long k) const {
    Divisor d;
    if (k == 0) return d;
    for (const auto& [p, m] : finite_) d.finite_.emplace_back(p, m * k);
    d.infinity_ = infinity_ * k;
    return d;
}

long Divisor::degree() const {
    long sum = infinity_;
    for (const auto& [p, m] : finite_) sum += m * p.degree();
    return sum;
}

bool Divisor::all_nonnegative() const {
    if (infinity_ < 0) return false;
    return std::all_of(finite_.begin(), finite_.end(), [](const auto& e) { return e.second >= 0; });
}

long Divisor::multiplicity_at(const TowerElement& c) const {
    for (const auto& [p, m] : finite_)
        if (p.eval(c).is_zero()) return m;
    return 0;
}

std::string Divisor::to_string() const {
    std::string s;
    for (const auto& [p, m] : finite_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(m) + "*(" + poly_to_string(p) + ")";
    }
    if (infinity_ != 0) {
        if (!s.empty()) s += " + ";
        s += std::to_string(infinity_) + "*(inf)";
    }
    return s.empty() ? "0" : s;
}

} // namespace kleinq
