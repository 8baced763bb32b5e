#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace kleinq {

using Int = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Canonical literal: "p" or "p/q".
std::string rational_literal(const Rational& x);

/// Round-half-even rendering with `sig` significant decimal digits.
/// Plain decimal for moderate exponents, scientific otherwise.
std::string rational_decimal(const Rational& x, int sig);

/// Scientific rendering "d.dd...e<k>" with `sig` significant digits.
std::string rational_scientific(const Rational& x, int sig);

} // namespace kleinq
