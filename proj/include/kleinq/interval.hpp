#pragma once

#include "kleinq/rational.hpp"

#include <mpfr.h>

namespace kleinq {

/// RAII wrapper for a single mpfr value.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Mpfr(const Mpfr& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Mpfr& operator=(Mpfr o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

/// Closed interval with outward-rounded endpoints at a fixed working precision.
struct Interval {
    Mpfr lo, hi;
    explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}

    static Interval of(const Rational& x, mpfr_prec_t prec);
    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval sqrt_nonneg() const; // value known >= 0; clamps a stray negative lo to 0

    /// +1 if lo > 0, -1 if hi < 0, 0 if the interval straddles or touches zero.
    int certified_sign() const;
    Rational lo_rational() const;
    Rational hi_rational() const;
    Rational width() const { return hi_rational() - lo_rational(); }
};

} // namespace kleinq
