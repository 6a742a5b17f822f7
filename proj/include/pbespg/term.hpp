#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pbespg/sorts.hpp"

namespace pbespg {

enum class Op : uint8_t {
    And, Or, Not, Implies,
    Eq, Neq, Lt, Leq, Gt, Geq,
    Plus, Minus,
    Size, Head, Tail, Snoc,
};

const char* op_name(Op op);
bool is_logical(Op op);     // And/Or/Not/Implies
bool is_comparison(Op op);  // Eq..Geq

class DataTerm;
using TermPtr = std::shared_ptr<const DataTerm>;

// Immutable, eagerly sort-checked data term. Closed literal subtrees are
// canonicalised into Lit nodes holding a Value.
class DataTerm {
public:
    enum class Kind : uint8_t { Lit, Var, List, Apply };

    static TermPtr lit(Value v);
    static TermPtr boolean(bool b) { return lit(Value::boolean(b)); }
    static TermPtr nat(uint64_t n) { return lit(Value::nat(n)); }
    static TermPtr var(std::string name, Sort sort);
    // List display; collapses to a Lit when every element is a value.
    static TermPtr list(Sort element_sort, std::vector<TermPtr> elements);
    // Sort-checks op against its argument sorts; throws SortError.
    static TermPtr apply(Op op, std::vector<TermPtr> args);
    static TermPtr apply(Op op, TermPtr a) { return apply(op, std::vector<TermPtr>{std::move(a)}); }
    static TermPtr apply(Op op, TermPtr a, TermPtr b) {
        return apply(op, std::vector<TermPtr>{std::move(a), std::move(b)});
    }

    Kind kind() const { return kind_; }
    const Sort& sort() const { return sort_; }

    const Value& value() const { return value_; }           // Lit
    const std::string& var_name() const { return name_; }   // Var
    Op op() const { return op_; }                           // Apply
    const std::vector<TermPtr>& children() const { return children_; }  // List/Apply

    bool is_value() const { return kind_ == Kind::Lit; }
    bool is_bool_lit(bool b) const {
        return kind_ == Kind::Lit && value_.kind() == Value::Kind::Bool &&
               value_.bool_value() == b;
    }

private:
    DataTerm() = default;
    Kind kind_ = Kind::Lit;
    Sort sort_ = Sort::boolean();
    Value value_ = Value::boolean(false);
    std::string name_;
    Op op_ = Op::And;
    std::vector<TermPtr> children_;
};

TermPtr value_to_term(const Value& v);

bool structural_equal(const TermPtr& a, const TermPtr& b);

// Free data variables of a term (terms have no binders, so all of them).
std::set<TypedVar> free_vars(const TermPtr& t);
void collect_free_vars(const TermPtr& t, std::set<TypedVar>& out);

std::string term_str(const TermPtr& t);  // defined with the printer

}  // namespace pbespg
