#pragma once

#include "kleinq/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace kleinq {

class ParamRing;
using ParamRingPtr = std::shared_ptr<const ParamRing>;

/// A polynomial ring Q[x_1, ..., x_n] of named free parameters.
class ParamRing {
public:
    static ParamRingPtr make(std::vector<std::string> names);
    size_t arity() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    int index_of(const std::string& name) const; // -1 if absent

private:
    explicit ParamRing(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

/// Sparse multivariate polynomial with rational coefficients, graded-lex
/// monomial order. Constants may carry a null ring and combine with any ring.
class ParamPoly {
public:
    using Monomial = std::vector<unsigned>; // exponent vector, ring arity long

    ParamPoly() = default;
    ParamPoly(const Rational& c);
    ParamPoly(long c) : ParamPoly(Rational(c)) {}
    ParamPoly(int c) : ParamPoly(Rational(c)) {}
    static ParamPoly variable(const ParamRingPtr& ring, size_t index);
    static ParamPoly constant(const ParamRingPtr& ring, const Rational& c);

    const ParamRingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly&, const ParamPoly&);
    friend ParamPoly operator-(const ParamPoly&, const ParamPoly&);
    friend ParamPoly operator*(const ParamPoly&, const ParamPoly&);
    friend bool operator==(const ParamPoly&, const ParamPoly&);
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }

    /// Graded-lex descending rendering, e.g. "2*mu1*pi1 - 3".
    std::string to_string() const;

private:
    struct GradedLex {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };
    void prune();
    static std::pair<ParamRingPtr, bool> join(const ParamPoly& a, const ParamPoly& b);
    ParamPoly aligned_to(const ParamRingPtr& r) const;

    ParamRingPtr ring_; // null for plain constants
    std::map<Monomial, Rational, GradedLex> terms_;
};

} // namespace kleinq
