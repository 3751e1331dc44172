#ifndef BRAIDFORGE_DSL_HPP
#define BRAIDFORGE_DSL_HPP

#include <string>

#include "braidforge/regeneration.hpp"

namespace braidforge {

/// Parse error with 1-based line/column position.
struct parse_error : braid_error {
    parse_error(const std::string& msg, int line, int col)
        : braid_error(msg + " at line " + std::to_string(line) + ", column " +
                      std::to_string(col)),
          line(line),
          col(col) {}
    int line, col;
};

/// Parses the factorization DSL. Factor atoms:
///   Z[a,b] Zbar[a,b] Z2[..] Z3[..] Z4[..] Delta2[l1,l2,...]
/// with doubled-pair endpoints written "a a'", detour suffixes
/// det(c-d,above|below), conjugation suffixes ^{expr} and _{expr} (both
/// w^-1 x w), integer powers ^k inside conjugator expressions, raw braid
/// words braid(1,-2,...), and the macros Fu/Fm/Fl(a,b,c,d).
/// Directives: "ambient base N" / "ambient doubled N", "group NAME",
/// "provenance paper|derived|reconstructed". '#' starts a comment.
Factorization parse_dsl(const std::string& text);

/// Parses a single braid expression (a product of atoms) over K.
BraidWord parse_braid_expr(const std::string& text, const PunctureSet& K);

std::string print_dsl(const Factorization& f);

}  // namespace braidforge

#endif
