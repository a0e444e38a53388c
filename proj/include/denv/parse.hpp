#pragma once

#include <cstddef>
#include <string>

#include "denv/ratfun.hpp"

namespace denv {

class ParseError : public Error {
public:
    ParseError(std::size_t column, const std::string& what)
        : Error("parse error at column " + std::to_string(column) + ": " + what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

inline constexpr int kMaxParsedExponent = 4096;

/// Rational expression in x over the field: integers, + - * / ^, parentheses,
/// `i` (gauss field) and `sqrt(d)` (field sqrt:d). Exponents are integer literals.
RatFun parse_ratfun(const std::string& src, const Field& field = {});
/// Same grammar without x.
Scalar parse_scalar(const std::string& src, const Field& field = {});

}  // namespace denv
