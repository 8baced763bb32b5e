#include "kleinq/number_parser.hpp"

#include <cctype>

namespace kleinq {

NumberParser::NumberParser() : real_(Tower::rationals()) {}

NumberParser::NumberParser(const TowerPtr& start)
    : real_(start->real_tower()), complex_(start->complexified()) {}

TowerPtr NumberParser::tower() const { return complex_ ? real_->complexify() : real_; }

void NumberParser::fail(const std::string& msg) const {
    throw Error("number literal parse error at position " + std::to_string(pos_) + ": " + msg +
                " in \"" + std::string(src_) + "\"");
}

void NumberParser::skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
}

bool NumberParser::eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
        ++pos_;
        return true;
    }
    return false;
}

TowerElement NumberParser::parse(std::string_view text) {
    src_ = text;
    pos_ = 0;
    TowerElement v = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return v;
}

TowerElement NumberParser::parse_expr() {
    TowerElement v = parse_term();
    for (;;) {
        if (eat('+')) v = v + parse_term();
        else if (eat('-')) v = v - parse_term();
        else return v;
    }
}

TowerElement NumberParser::parse_term() {
    TowerElement v = parse_unary();
    for (;;) {
        if (eat('*')) v = v * parse_unary();
        else if (eat('/')) {
            TowerElement d = parse_unary();
            if (d.is_zero()) fail("division by zero");
            v = v / d;
        } else return v;
    }
}

TowerElement NumberParser::parse_unary() {
    if (eat('-')) return -parse_unary();
    if (eat('+')) return parse_unary();
    return parse_primary();
}

TowerElement NumberParser::parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        Int n(std::string(src_.substr(start, pos_ - start)), 10);
        return TowerElement(Rational(n));
    }
    if (c == '(') {
        ++pos_;
        TowerElement v = parse_expr();
        if (!eat(')')) fail("expected ')'");
        return v;
    }
    if (c == 'i' && (pos_ + 1 == src_.size() ||
                     !std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])))) {
        ++pos_;
        complex_ = true;
        return TowerElement::imaginary(real_->complexify());
    }
    if (src_.substr(pos_, 4) == "sqrt") {
        pos_ += 4;
        if (!eat('(')) fail("expected '(' after sqrt");
        TowerElement arg = parse_expr();
        if (!eat(')')) fail("expected ')'");
        if (!arg.imag_part().is_zero()) fail("sqrt of a non-real value");
        TowerElement re = arg.real_part();
        if (re.sign() < 0) fail("sqrt of a negative value");
        TowerElement promoted = TowerElement::zero(real_) + re;
        if (auto root = promoted.exact_sqrt()) return *root;
        real_ = real_->extend_sqrt(promoted);
        return TowerElement::generator(real_, real_->levels() - 1);
    }
    fail("unexpected character");
}

} // namespace kleinq
