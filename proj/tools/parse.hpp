#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

#include "cfzeta/cont_frac.hpp"
#include "cfzeta/int_matrix.hpp"
#include "cfzeta/surd.hpp"

namespace cfzeta::cli {

/**
 * Error raised when command-line input text does not match its grammar.
 * The position is a 0-based byte offset into the offending string and is
 * already baked into the what() message.
 */
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("parse error at position " +
                             std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parse "(p+sqrt(d))/q", "(p-sqrt(d))/q", "sqrt(d)/q", or "sqrt(d)", with
/// optional whitespace. The value is reduced mod 1, so the result always
/// lies in (0,1). Rejects square or non-positive radicands (the value would
/// be rational) and zero denominators.
QuadraticSurd parse_surd(const std::string& text);

/// Parse "[a1,...,ak;(b1,...,bl)]"; the preperiod may be empty ("[;(1)]"),
/// the period may not. Partial quotients must be >= 1.
CFExpansion parse_cf(const std::string& text);

/// Parse "[[a,b],[c,d]]" as a 2x2 integer matrix.
IntMatrix parse_matrix(const std::string& text);

/// Dispatch on the leading characters: "[[" starts a matrix, "[" a
/// continued fraction, anything else a surd.
std::variant<QuadraticSurd, CFExpansion, IntMatrix> parse_input(
    const std::string& text);

}  // namespace cfzeta::cli
