#include "pbespg/rewriter.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "pbespg/errors.hpp"

namespace pbespg {

namespace {

constexpr uint64_t kEnumerationCap = 10'000'000;

Binding without(const Binding& b, const std::vector<TypedVar>& shadowed) {
    Binding out = b;
    for (const TypedVar& v : shadowed) out.erase(v.name);
    return out;
}

}  // namespace

TermPtr substitute(const TermPtr& t, const Binding& b) {
    if (b.empty()) return t;
    switch (t->kind()) {
        case DataTerm::Kind::Lit:
            return t;
        case DataTerm::Kind::Var: {
            auto it = b.find(t->var_name());
            if (it == b.end()) return t;
            if (it->second.sort() != t->sort())
                throw SortError("substituting " + it->second.sort().str() + " value for " +
                                t->var_name() + ":" + t->sort().str());
            return value_to_term(it->second);
        }
        case DataTerm::Kind::List: {
            std::vector<TermPtr> elems;
            elems.reserve(t->children().size());
            bool changed = false;
            for (const TermPtr& c : t->children()) {
                elems.push_back(substitute(c, b));
                changed = changed || elems.back().get() != c.get();
            }
            if (!changed) return t;
            return DataTerm::list(t->sort().element(), std::move(elems));
        }
        case DataTerm::Kind::Apply: {
            std::vector<TermPtr> args;
            args.reserve(t->children().size());
            bool changed = false;
            for (const TermPtr& c : t->children()) {
                args.push_back(substitute(c, b));
                changed = changed || args.back().get() != c.get();
            }
            if (!changed) return t;
            return DataTerm::apply(t->op(), std::move(args));
        }
    }
    return t;
}

FormulaPtr substitute(const FormulaPtr& f, const Binding& b) {
    if (b.empty()) return f;
    switch (f->kind()) {
        case Formula::Kind::Val: {
            TermPtr t = substitute(f->term(), b);
            return t.get() == f->term().get() ? f : Formula::val(t);
        }
        case Formula::Kind::PredVar: {
            std::vector<TermPtr> args;
            args.reserve(f->args().size());
            bool changed = false;
            for (const TermPtr& a : f->args()) {
                args.push_back(substitute(a, b));
                changed = changed || args.back().get() != a.get();
            }
            if (!changed) return f;
            return Formula::pred_var(f->var_name(), std::move(args), f->loc());
        }
        case Formula::Kind::Neg: {
            FormulaPtr c = substitute(f->left(), b);
            return c.get() == f->left().get() ? f : Formula::neg(c);
        }
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies: {
            FormulaPtr l = substitute(f->left(), b);
            FormulaPtr r = substitute(f->right(), b);
            if (l.get() == f->left().get() && r.get() == f->right().get()) return f;
            switch (f->kind()) {
                case Formula::Kind::And: return Formula::conj(l, r);
                case Formula::Kind::Or: return Formula::disj(l, r);
                default: return Formula::implies(l, r);
            }
        }
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            Binding inner = without(b, f->bound());
            FormulaPtr body = substitute(f->body(), inner);
            if (body.get() == f->body().get()) return f;
            return f->kind() == Formula::Kind::Forall
                       ? Formula::forall(f->bound(), body)
                       : Formula::exists(f->bound(), body);
        }
    }
    return f;
}

namespace {

uint64_t checked_add(uint64_t a, uint64_t b) {
    if (a > std::numeric_limits<uint64_t>::max() - b) throw EvalError("Nat overflow in +");
    return a + b;
}

// Nat subtraction is monus: truncates at zero.
uint64_t monus(uint64_t a, uint64_t b) { return a < b ? 0 : a - b; }

Value eval_apply(Op op, std::span<const Value> v) {
    switch (op) {
        case Op::And: return Value::boolean(v[0].bool_value() && v[1].bool_value());
        case Op::Or: return Value::boolean(v[0].bool_value() || v[1].bool_value());
        case Op::Not: return Value::boolean(!v[0].bool_value());
        case Op::Implies: return Value::boolean(!v[0].bool_value() || v[1].bool_value());
        case Op::Eq: return Value::boolean(v[0] == v[1]);
        case Op::Neq: return Value::boolean(v[0] != v[1]);
        case Op::Lt: return Value::boolean(v[0].nat_value() < v[1].nat_value());
        case Op::Leq: return Value::boolean(v[0].nat_value() <= v[1].nat_value());
        case Op::Gt: return Value::boolean(v[0].nat_value() > v[1].nat_value());
        case Op::Geq: return Value::boolean(v[0].nat_value() >= v[1].nat_value());
        case Op::Plus: return Value::nat(checked_add(v[0].nat_value(), v[1].nat_value()));
        case Op::Minus: return Value::nat(monus(v[0].nat_value(), v[1].nat_value()));
        case Op::Size: return Value::nat(v[0].elements().size());
        case Op::Head:
            if (v[0].elements().empty()) throw EvalError("head of empty list");
            return v[0].elements().front();
        case Op::Tail: {
            if (v[0].elements().empty()) throw EvalError("tail of empty list");
            std::vector<Value> rest(v[0].elements().begin() + 1, v[0].elements().end());
            return Value::list(v[0].element_sort(), std::move(rest));
        }
        case Op::Snoc: {
            std::vector<Value> elems = v[0].elements();
            elems.push_back(v[1]);
            return Value::list(v[0].element_sort(), std::move(elems));
        }
    }
    throw EvalError("unknown operator");
}

struct Outcome {
    std::optional<Value> value;
    std::exception_ptr error;
};

Outcome try_eval(const TermPtr& t, const Binding& env) {
    try {
        return {eval(t, env), nullptr};
    } catch (const EvalError&) {
        return {std::nullopt, std::current_exception()};
    }
}

bool is_true(const Outcome& o) { return o.value && o.value->bool_value(); }
bool is_false(const Outcome& o) { return o.value && !o.value->bool_value(); }

[[noreturn]] void rethrow_first(const Outcome& a, const Outcome& b) {
    if (a.error) std::rethrow_exception(a.error);
    std::rethrow_exception(b.error);
}

}  // namespace

Value eval(const TermPtr& t, const Binding& env) {
    switch (t->kind()) {
        case DataTerm::Kind::Lit:
            return t->value();
        case DataTerm::Kind::Var: {
            auto it = env.find(t->var_name());
            if (it == env.end())
                throw EvalError("unbound variable " + t->var_name());
            if (it->second.sort() != t->sort())
                throw SortError("binding for " + t->var_name() + " has sort " +
                                it->second.sort().str() + ", expected " + t->sort().str());
            return it->second;
        }
        case DataTerm::Kind::List: {
            std::vector<Value> elems;
            elems.reserve(t->children().size());
            for (const TermPtr& c : t->children()) elems.push_back(eval(c, env));
            return Value::list(t->sort().element(), std::move(elems));
        }
        case DataTerm::Kind::Apply: {
            Op op = t->op();
            if (op == Op::And || op == Op::Or || op == Op::Implies) {
                Outcome a = try_eval(t->children()[0], env);
                Outcome b = try_eval(t->children()[1], env);
                if (op == Op::And) {
                    if (is_false(a) || is_false(b)) return Value::boolean(false);
                    if (is_true(a) && is_true(b)) return Value::boolean(true);
                } else if (op == Op::Or) {
                    if (is_true(a) || is_true(b)) return Value::boolean(true);
                    if (is_false(a) && is_false(b)) return Value::boolean(false);
                } else {
                    if (is_false(a) || is_true(b)) return Value::boolean(true);
                    if (is_true(a) && is_false(b)) return Value::boolean(false);
                }
                rethrow_first(a, b);
            }
            std::vector<Value> args;
            args.reserve(t->children().size());
            for (const TermPtr& c : t->children()) args.push_back(eval(c, env));
            return eval_apply(op, args);
        }
    }
    throw EvalError("unreachable term kind");
}

namespace {

struct SimpOutcome {
    TermPtr term;  // null when evaluation failed
    std::exception_ptr error;

    bool is_bool(bool b) const { return term && term->is_bool_lit(b); }
};

SimpOutcome simp(const TermPtr& t);

SimpOutcome simp_guarded(const TermPtr& t) {
    try {
        return {simp(t).term, nullptr};
    } catch (const EvalError&) {
        return {nullptr, std::current_exception()};
    }
}

SimpOutcome simp(const TermPtr& t) {
    switch (t->kind()) {
        case DataTerm::Kind::Lit:
        case DataTerm::Kind::Var:
            return {t, nullptr};
        case DataTerm::Kind::List: {
            std::vector<TermPtr> elems;
            bool changed = false;
            for (const TermPtr& c : t->children()) {
                SimpOutcome e = simp(c);
                if (e.error) std::rethrow_exception(e.error);
                elems.push_back(e.term);
                changed = changed || e.term.get() != c.get();
            }
            return {changed ? DataTerm::list(t->sort().element(), std::move(elems)) : t,
                    nullptr};
        }
        case DataTerm::Kind::Apply:
            break;
    }
    Op op = t->op();
    if (op == Op::And || op == Op::Or || op == Op::Implies) {
        SimpOutcome a = simp_guarded(t->children()[0]);
        SimpOutcome b = simp_guarded(t->children()[1]);
        if (op == Op::And) {
            if (a.is_bool(false) || b.is_bool(false)) return {DataTerm::boolean(false), nullptr};
            if (a.is_bool(true) && b.is_bool(true)) return {DataTerm::boolean(true), nullptr};
            if (a.is_bool(true)) { if (b.error) std::rethrow_exception(b.error); return b; }
            if (b.is_bool(true)) { if (a.error) std::rethrow_exception(a.error); return a; }
        } else if (op == Op::Or) {
            if (a.is_bool(true) || b.is_bool(true)) return {DataTerm::boolean(true), nullptr};
            if (a.is_bool(false) && b.is_bool(false)) return {DataTerm::boolean(false), nullptr};
            if (a.is_bool(false)) { if (b.error) std::rethrow_exception(b.error); return b; }
            if (b.is_bool(false)) { if (a.error) std::rethrow_exception(a.error); return a; }
        } else {
            if (a.is_bool(false) || b.is_bool(true)) return {DataTerm::boolean(true), nullptr};
            if (a.is_bool(true) && b.is_bool(false)) return {DataTerm::boolean(false), nullptr};
            if (a.is_bool(true)) { if (b.error) std::rethrow_exception(b.error); return b; }
        }
        if (a.error) std::rethrow_exception(a.error);
        if (b.error) std::rethrow_exception(b.error);
        if (a.term.get() == t->children()[0].get() && b.term.get() == t->children()[1].get())
            return {t, nullptr};
        return {DataTerm::apply(op, a.term, b.term), nullptr};
    }
    std::vector<TermPtr> args;
    bool changed = false;
    bool all_values = true;
    for (const TermPtr& c : t->children()) {
        SimpOutcome a = simp(c);
        if (a.error) std::rethrow_exception(a.error);
        args.push_back(a.term);
        changed = changed || a.term.get() != c.get();
        all_values = all_values && a.term->is_value();
    }
    if (all_values) {
        std::vector<Value> vals;
        vals.reserve(args.size());
        for (const TermPtr& a : args) vals.push_back(a->value());
        return {value_to_term(eval_apply(op, vals)), nullptr};
    }
    if (op == Op::Not && args[0]->is_value())
        return {DataTerm::boolean(!args[0]->value().bool_value()), nullptr};
    return {changed ? DataTerm::apply(op, std::move(args)) : t, nullptr};
}

}  // namespace

TermPtr simplify(const TermPtr& t) {
    SimpOutcome o = simp(t);
    if (o.error) std::rethrow_exception(o.error);
    return o.term;
}

namespace {

// Upper bound for a Nat quantifier variable, from top-level guard conjuncts
// of the form v < e, v <= e, e > v, e >= v with e closed under env.
std::optional<uint64_t> nat_bound(const std::string& var, const TermPtr& guard,
                                  const Binding& env) {
    std::vector<TermPtr> conjuncts;
    std::vector<TermPtr> stack{guard};
    while (!stack.empty()) {
        TermPtr c = stack.back();
        stack.pop_back();
        if (c->kind() == DataTerm::Kind::Apply && c->op() == Op::And) {
            stack.push_back(c->children()[0]);
            stack.push_back(c->children()[1]);
        } else {
            conjuncts.push_back(c);
        }
    }
    std::optional<uint64_t> best;
    for (const TermPtr& c : conjuncts) {
        if (c->kind() != DataTerm::Kind::Apply) continue;
        Op op = c->op();
        TermPtr vside, eside;
        bool strict;
        if ((op == Op::Lt || op == Op::Leq)) {
            vside = c->children()[0];
            eside = c->children()[1];
            strict = op == Op::Lt;
        } else if (op == Op::Gt || op == Op::Geq) {
            vside = c->children()[1];
            eside = c->children()[0];
            strict = op == Op::Gt;
        } else {
            continue;
        }
        if (vside->kind() != DataTerm::Kind::Var || vside->var_name() != var) continue;
        uint64_t limit;
        try {
            limit = eval(eside, env).nat_value();
        } catch (const EvalError&) {
            continue;  // bound not closed under env
        }
        // v < limit admits limit values, v <= limit admits limit+1.
        uint64_t count = strict ? limit
                                : (limit == std::numeric_limits<uint64_t>::max()
                                       ? limit
                                       : limit + 1);
        if (!best || count < *best) best = count;
    }
    return best;  // number of candidate values: domain is 0..count-1
}

}  // namespace

std::vector<Binding> enumerate(const std::vector<TypedVar>& vars, const TermPtr& guard,
                               const Binding& env) {
    // Domains, in declaration order.
    std::vector<std::vector<Value>> domains;
    uint64_t total = 1;
    for (const TypedVar& v : vars) {
        std::vector<Value> domain;
        switch (v.sort.kind()) {
            case Sort::Kind::Bool:
                domain = {Value::boolean(false), Value::boolean(true)};
                break;
            case Sort::Kind::Enum: {
                const EnumDeclPtr& d = v.sort.enum_decl_ptr();
                for (uint32_t i = 0; i < d->constructors.size(); ++i)
                    domain.push_back(Value::enumerated(d, i));
                break;
            }
            case Sort::Kind::Nat: {
                std::optional<uint64_t> count = nat_bound(v.name, guard, env);
                if (!count) throw UnboundedQuantifierError(v.name);
                for (uint64_t n = 0; n < *count; ++n) domain.push_back(Value::nat(n));
                break;
            }
            case Sort::Kind::List:
                throw UnboundedQuantifierError(v.name);
        }
        total *= std::max<uint64_t>(domain.size(), 1);
        if (total > kEnumerationCap)
            throw EvalError("quantifier enumeration exceeds " +
                            std::to_string(kEnumerationCap) + " candidates");
        if (domain.empty()) return {};
        domains.push_back(std::move(domain));
    }

    std::vector<Binding> out;
    std::vector<size_t> idx(vars.size(), 0);
    while (true) {
        Binding candidate = env;
        Binding just_vars;
        for (size_t i = 0; i < vars.size(); ++i) {
            candidate[vars[i].name] = domains[i][idx[i]];
            just_vars[vars[i].name] = domains[i][idx[i]];
        }
        Value g = eval(guard, candidate);
        if (g.bool_value()) out.push_back(std::move(just_vars));
        // advance, last variable fastest
        size_t k = vars.size();
        while (k > 0) {
            --k;
            if (++idx[k] < domains[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (vars.empty()) return out;
    }
}

}  // namespace pbespg
