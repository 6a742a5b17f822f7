#pragma once

#include <string>

#include "pbespg/pbes.hpp"

namespace pbespg {

// Parse the textual .pbes format:
//
//   file      := sortdecl* "pbes" equation+ "init" predvar ";"
//   sortdecl  := "sort" NAME "=" NAME ("|" NAME)* ";"
//   equation  := ("mu"|"nu") NAME "(" params? ")" "=" formula ";"
//   params    := NAME ":" sort ("," NAME ":" sort)*
//   sort      := "Bool" | "Nat" | "List" "(" sort ")" | NAME
//
// Formula operators, loosest first: => (right), ||, &&, !, then data-term
// comparisons (==, !=, <, <=, >, >=), <| (snoc, left), + and - (left), #
// (prefix). Quantifiers ("forall"/"exists" params "." body) extend as far
// right as possible. Boolean data terms appear directly as formulas;
// "val(...)" forces the data-term reading. "--" starts a line comment.
//
// Throws ParseError (with location), SortError, or ValidationError.
Pbes parse_pbes(const std::string& text);

// Deterministic pretty-printer; parse_pbes(print_pbes(p)) is structurally
// identical to p.
std::string print_pbes(const Pbes& p);

std::string print_equation(const Equation& eq);

}  // namespace pbespg
