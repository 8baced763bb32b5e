#include "kleinq/interval.hpp"

#include <algorithm>

namespace kleinq {

Interval Interval::of(const Rational& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.get(), x.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(mpfr_get_prec(lo.get()));
    mpfr_add(r.lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), hi.get(), o.hi.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(mpfr_get_prec(lo.get()));
    mpfr_sub(r.lo.get(), lo.get(), o.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), hi.get(), o.lo.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    mpfr_prec_t prec = mpfr_get_prec(lo.get());
    Interval r(prec);
    Mpfr t(prec);
    bool first = true;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            mpfr_srcptr a = i ? hi.get() : lo.get();
            mpfr_srcptr b = j ? o.hi.get() : o.lo.get();
            mpfr_mul(t.get(), a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Interval Interval::sqrt_nonneg() const {
    Interval r(mpfr_get_prec(lo.get()));
    if (mpfr_sgn(lo.get()) <= 0) {
        mpfr_set_zero(r.lo.get(), 1);
    } else {
        mpfr_sqrt(r.lo.get(), lo.get(), MPFR_RNDD);
    }
    mpfr_sqrt(r.hi.get(), hi.get(), MPFR_RNDU);
    return r;
}

int Interval::certified_sign() const {
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
    return 0;
}

namespace {
Rational to_rational(mpfr_srcptr v) {
    if (mpfr_zero_p(v)) return Rational(0);
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v);
    Rational r(m);
    if (e >= 0) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rational(p);
    } else {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rational(p);
    }
    return r;
}
} // namespace

Rational Interval::lo_rational() const { return to_rational(lo.get()); }
Rational Interval::hi_rational() const { return to_rational(hi.get()); }

} // namespace kleinq
