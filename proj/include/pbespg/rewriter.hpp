#pragma once

#include <map>
#include <span>
#include <vector>

#include "pbespg/formula.hpp"

namespace pbespg {

// Mapping from variable name to a closed value. Sorts are checked against
// the variable occurrence on use.
using Binding = std::map<std::string, Value>;

// Replace every free occurrence of a bound-in-b variable; quantifier-bound
// variables shadow b. Throws SortError when a value's sort does not match
// the variable it replaces.
TermPtr substitute(const TermPtr& t, const Binding& b);
FormulaPtr substitute(const FormulaPtr& f, const Binding& b);

// Evaluate a term that is closed under env to a Value. Conjunction,
// disjunction and implication are non-strict in both operands: if one
// operand decides the result, an evaluation error in the other is absorbed.
// Throws EvalError otherwise (head/tail of [], Nat overflow, unbound var).
Value eval(const TermPtr& t, const Binding& env);

// Closed terms evaluate to a literal; open terms are simplified bottom-up
// where subterms are closed, applying constant unit/absorption laws for the
// logical operators. Idempotent.
TermPtr simplify(const TermPtr& t);

// All bindings of vars over their domains for which the guard evaluates to
// true under env + binding. Bool and enum variables range over their
// constructors; a Nat variable needs a top-level guard conjunct v < e or
// v <= e with e closed under env. Cartesian order: first variable slowest,
// each domain in canonical order. Throws UnboundedQuantifierError.
std::vector<Binding> enumerate(const std::vector<TypedVar>& vars, const TermPtr& guard,
                               const Binding& env);

}  // namespace pbespg
