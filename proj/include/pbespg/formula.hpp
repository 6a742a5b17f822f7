#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pbespg/term.hpp"

namespace pbespg {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Predicate formula in positive form: Val(b) | X(e...) | !phi | phi && phi |
// phi || phi | phi => phi | forall v... . phi | exists v... . phi.
// Multi-variable quantifiers are a single node with a typed binder list.
class Formula {
public:
    enum class Kind : uint8_t { Val, PredVar, Neg, And, Or, Implies, Forall, Exists };

    static FormulaPtr val(TermPtr term);  // term must have sort Bool
    static FormulaPtr truth() { return val(DataTerm::boolean(true)); }
    static FormulaPtr pred_var(std::string name, std::vector<TermPtr> args,
                               SourceLoc loc = {});
    static FormulaPtr neg(FormulaPtr f);
    static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
    static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
    static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
    static FormulaPtr forall(std::vector<TypedVar> bound, FormulaPtr body);
    static FormulaPtr exists(std::vector<TypedVar> bound, FormulaPtr body);

    Kind kind() const { return kind_; }
    const TermPtr& term() const { return term_; }                 // Val
    const std::string& var_name() const { return name_; }         // PredVar
    const std::vector<TermPtr>& args() const { return args_; }    // PredVar
    const FormulaPtr& left() const { return left_; }              // binary, Neg
    const FormulaPtr& right() const { return right_; }            // binary
    const std::vector<TypedVar>& bound() const { return bound_; }  // quantifiers
    const FormulaPtr& body() const { return body_; }              // quantifiers
    SourceLoc loc() const { return loc_; }

    bool is_quantifier() const { return kind_ == Kind::Forall || kind_ == Kind::Exists; }

private:
    Formula() = default;
    static std::shared_ptr<Formula> make() {
        return std::shared_ptr<Formula>(new Formula());
    }
    Kind kind_ = Kind::Val;
    TermPtr term_;
    std::string name_;
    std::vector<TermPtr> args_;
    FormulaPtr left_, right_;
    std::vector<TypedVar> bound_;
    FormulaPtr body_;
    SourceLoc loc_;
};

// All predicate variable names occurring anywhere in phi.
std::set<std::string> occ(const FormulaPtr& f);

// Data variables not bound by an enclosing quantifier.
std::set<TypedVar> free_vars(const FormulaPtr& f);

// No predicate variable anywhere (Def. "simple formula").
bool is_simple(const FormulaPtr& f);
// Simple and quantifier-free: equivalent to a Bool data term.
bool is_simple_quantifier_free(const FormulaPtr& f);

bool structural_equal(const FormulaPtr& a, const FormulaPtr& b);
// Structural equality modulo consistent renaming of quantifier-bound variables.
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

std::string formula_str(const FormulaPtr& f);  // defined with the printer

// Flatten nested binary nodes of the given kind (And or Or), left to right.
std::vector<FormulaPtr> flatten(const FormulaPtr& f, Formula::Kind kind);
// Left-associative fold, matching the parser's associativity; empty input
// yields Val(true) for And and Val(false) for Or.
FormulaPtr fold(const std::vector<FormulaPtr>& parts, Formula::Kind kind);

}  // namespace pbespg
