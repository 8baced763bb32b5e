#include "kleinq/rational.hpp"

namespace kleinq {

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    Int n = x.get_num(), d = x.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rational r(sn, sd);
    r.canonicalize();
    return r;
}

std::string rational_literal(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

// Decimal exponent k with 10^k <= |x| < 10^(k+1), for x != 0.
long decimal_exponent(const Rational& x) {
    Rational a = abs(x);
    // initial guess from bit sizes: log10(2) ~ 0.30103
    long bits = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 2));
    long k = static_cast<long>(bits * 0.30103) - 2;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k >= 0 ? k : -k));
    Rational pw = k >= 0 ? Rational(p) : Rational(1, p);
    while (pw > a) { pw /= 10; --k; }
    while (pw * 10 <= a) { pw *= 10; ++k; }
    return k;
}

// |x| * 10^(sig-1-k) rounded half-even to an integer; returns digit string of length
// sig (unless rounding overflows to sig+1 digits, handled by the caller via k).
std::string rounded_digits(const Rational& x, int sig, long& k) {
    Rational a = abs(x);
    k = decimal_exponent(a);
    long shift = sig - 1 - k;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
    Rational scaled = shift >= 0 ? Rational(a * p) : Rational(a / p);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(),
                scaled.get_den().get_mpz_t());
    Rational frac(r, scaled.get_den());
    frac.canonicalize();
    int half = cmp(frac, Rational(1, 2));
    if (half > 0) q += 1;
    else if (half == 0 && mpz_odd_p(q.get_mpz_t())) q += 1;
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) == sig + 1) { // e.g. 9.99... -> 10.0...
        ++k;
        digits.pop_back(); // trailing zero from the carry
    }
    return digits;
}

} // namespace

std::string rational_decimal(const Rational& x, int sig) {
    if (sgn(x) == 0) return "0";
    long k = 0;
    std::string digits = rounded_digits(x, sig, k);
    std::string s = sgn(x) < 0 ? "-" : "";
    if (k >= 0 && k <= 17) {
        if (k + 1 >= static_cast<long>(digits.size())) {
            s += digits;
            s.append(static_cast<size_t>(k + 1 - digits.size()), '0');
        } else {
            s += digits.substr(0, k + 1) + "." + digits.substr(k + 1);
        }
    } else if (k < 0 && k >= -6) {
        s += "0.";
        s.append(static_cast<size_t>(-k - 1), '0');
        s += digits;
    } else {
        s += digits.substr(0, 1);
        if (digits.size() > 1) s += "." + digits.substr(1);
        s += "e" + std::to_string(k);
    }
    // strip redundant trailing zeros in the fractional part
    if (s.find('.') != std::string::npos && s.find('e') == std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

std::string rational_scientific(const Rational& x, int sig) {
    if (sgn(x) == 0) return "0";
    long k = 0;
    std::string digits = rounded_digits(x, sig, k);
    std::string s = sgn(x) < 0 ? "-" : "";
    s += digits.substr(0, 1);
    if (digits.size() > 1) s += "." + digits.substr(1);
    s += "e" + std::to_string(k);
    return s;
}

} // namespace kleinq
