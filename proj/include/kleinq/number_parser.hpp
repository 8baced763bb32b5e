#pragma once

#include "kleinq/tower.hpp"

#include <string>
#include <string_view>

namespace kleinq {

/// Recursive-descent parser for the exact-number literal grammar:
/// integers, `p/q`, `sqrt(<expr>)`, `i`, with + - * / and parentheses.
/// Radicals extend the working tower only when the radicand is not already
/// a square there, so the accumulated tower is minimal. One parser instance
/// is shared across all literals of an input file so they land in one tower.
class NumberParser {
public:
    NumberParser();
    explicit NumberParser(const TowerPtr& start);

    TowerElement parse(std::string_view text);

    /// Tower accumulated over every literal parsed so far.
    TowerPtr tower() const;
    const TowerPtr& real_tower() const { return real_; }
    bool complexified() const { return complex_; }

private:
    TowerElement parse_expr();
    TowerElement parse_term();
    TowerElement parse_unary();
    TowerElement parse_primary();
    void skip_ws();
    bool eat(char c);
    [[noreturn]] void fail(const std::string& msg) const;

    TowerPtr real_;
    bool complex_ = false;
    std::string_view src_;
    size_t pos_ = 0;
};

} // namespace kleinq
