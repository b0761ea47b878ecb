#pragma once

#include <stdexcept>
#include <string>

#include "qhopf/ncalg.hpp"

namespace qhopf {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

/// Parses the textual expression grammar shared by the CLI and fixtures:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | 'q' ['^' int] | '(' expr ')' | generator | 'conj' '(' expr ')'
/// Generators: x1..x4, xb1..xb4, a, ab, b, bb, t, alpha, gamma, alphab, gammab.
/// Scalar subexpressions commute; 'conj' applies the *-involution. The result
/// is a free NCPoly (no normalization).
NCPoly parse_expr(const std::string& s);

}  // namespace qhopf
