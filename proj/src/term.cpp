#include "pbespg/term.hpp"

#include "pbespg/errors.hpp"

namespace pbespg {

const char* op_name(Op op) {
    switch (op) {
        case Op::And: return "&&";
        case Op::Or: return "||";
        case Op::Not: return "!";
        case Op::Implies: return "=>";
        case Op::Eq: return "==";
        case Op::Neq: return "!=";
        case Op::Lt: return "<";
        case Op::Leq: return "<=";
        case Op::Gt: return ">";
        case Op::Geq: return ">=";
        case Op::Plus: return "+";
        case Op::Minus: return "-";
        case Op::Size: return "#";
        case Op::Head: return "head";
        case Op::Tail: return "tail";
        case Op::Snoc: return "<|";
    }
    return "?";
}

bool is_logical(Op op) {
    return op == Op::And || op == Op::Or || op == Op::Not || op == Op::Implies;
}

bool is_comparison(Op op) {
    switch (op) {
        case Op::Eq: case Op::Neq: case Op::Lt:
        case Op::Leq: case Op::Gt: case Op::Geq:
            return true;
        default:
            return false;
    }
}

TermPtr DataTerm::lit(Value v) {
    auto t = std::shared_ptr<DataTerm>(new DataTerm());
    t->kind_ = Kind::Lit;
    t->sort_ = v.sort();
    t->value_ = std::move(v);
    return t;
}

TermPtr DataTerm::var(std::string name, Sort sort) {
    auto t = std::shared_ptr<DataTerm>(new DataTerm());
    t->kind_ = Kind::Var;
    t->sort_ = std::move(sort);
    t->name_ = std::move(name);
    return t;
}

TermPtr DataTerm::list(Sort element_sort, std::vector<TermPtr> elements) {
    bool all_values = true;
    for (const TermPtr& e : elements) {
        if (e->sort() != element_sort)
            throw SortError("list element of sort " + e->sort().str() + " in List(" +
                            element_sort.str() + ")");
        all_values = all_values && e->is_value();
    }
    if (all_values) {
        std::vector<Value> vals;
        vals.reserve(elements.size());
        for (const TermPtr& e : elements) vals.push_back(e->value());
        return lit(Value::list(std::move(element_sort), std::move(vals)));
    }
    auto t = std::shared_ptr<DataTerm>(new DataTerm());
    t->kind_ = Kind::List;
    t->sort_ = Sort::list(element_sort);
    t->children_ = std::move(elements);
    return t;
}

namespace {

void require_arity(Op op, const std::vector<TermPtr>& args, size_t n) {
    if (args.size() != n)
        throw SortError(std::string("operator '") + op_name(op) + "' expects " +
                        std::to_string(n) + " arguments, got " + std::to_string(args.size()));
}

void require_sort(Op op, const TermPtr& arg, const Sort& s) {
    if (arg->sort() != s)
        throw SortError(std::string("operator '") + op_name(op) + "' expects sort " +
                        s.str() + ", got " + arg->sort().str());
}

}  // namespace

TermPtr DataTerm::apply(Op op, std::vector<TermPtr> args) {
    Sort result = Sort::boolean();
    switch (op) {
        case Op::And:
        case Op::Or:
        case Op::Implies:
            require_arity(op, args, 2);
            require_sort(op, args[0], Sort::boolean());
            require_sort(op, args[1], Sort::boolean());
            break;
        case Op::Not:
            require_arity(op, args, 1);
            require_sort(op, args[0], Sort::boolean());
            break;
        case Op::Eq:
        case Op::Neq:
            require_arity(op, args, 2);
            if (args[0]->sort() != args[1]->sort())
                throw SortError(std::string("'") + op_name(op) + "' on unequal sorts " +
                                args[0]->sort().str() + " and " + args[1]->sort().str());
            break;
        case Op::Lt:
        case Op::Leq:
        case Op::Gt:
        case Op::Geq:
            require_arity(op, args, 2);
            require_sort(op, args[0], Sort::nat());
            require_sort(op, args[1], Sort::nat());
            break;
        case Op::Plus:
        case Op::Minus:
            require_arity(op, args, 2);
            require_sort(op, args[0], Sort::nat());
            require_sort(op, args[1], Sort::nat());
            result = Sort::nat();
            break;
        case Op::Size:
            require_arity(op, args, 1);
            if (!args[0]->sort().is_list())
                throw SortError("'#' expects a list, got " + args[0]->sort().str());
            result = Sort::nat();
            break;
        case Op::Head:
            require_arity(op, args, 1);
            if (!args[0]->sort().is_list())
                throw SortError("'head' expects a list, got " + args[0]->sort().str());
            result = args[0]->sort().element();
            break;
        case Op::Tail:
            require_arity(op, args, 1);
            if (!args[0]->sort().is_list())
                throw SortError("'tail' expects a list, got " + args[0]->sort().str());
            result = args[0]->sort();
            break;
        case Op::Snoc:
            require_arity(op, args, 2);
            if (!args[0]->sort().is_list())
                throw SortError("'<|' expects a list, got " + args[0]->sort().str());
            require_sort(op, args[1], args[0]->sort().element());
            result = args[0]->sort();
            break;
    }
    auto t = std::shared_ptr<DataTerm>(new DataTerm());
    t->kind_ = Kind::Apply;
    t->sort_ = std::move(result);
    t->op_ = op;
    t->children_ = std::move(args);
    return t;
}

TermPtr value_to_term(const Value& v) { return DataTerm::lit(v); }

bool structural_equal(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case DataTerm::Kind::Lit:
            return a->value() == b->value();
        case DataTerm::Kind::Var:
            return a->var_name() == b->var_name() && a->sort() == b->sort();
        case DataTerm::Kind::List:
        case DataTerm::Kind::Apply: {
            if (a->kind() == DataTerm::Kind::Apply && a->op() != b->op()) return false;
            if (a->sort() != b->sort()) return false;
            const auto& ca = a->children();
            const auto& cb = b->children();
            if (ca.size() != cb.size()) return false;
            for (size_t i = 0; i < ca.size(); ++i)
                if (!structural_equal(ca[i], cb[i])) return false;
            return true;
        }
    }
    return false;
}

void collect_free_vars(const TermPtr& t, std::set<TypedVar>& out) {
    switch (t->kind()) {
        case DataTerm::Kind::Lit:
            return;
        case DataTerm::Kind::Var:
            out.insert(TypedVar{t->var_name(), t->sort()});
            return;
        case DataTerm::Kind::List:
        case DataTerm::Kind::Apply:
            for (const TermPtr& c : t->children()) collect_free_vars(c, out);
            return;
    }
}

std::set<TypedVar> free_vars(const TermPtr& t) {
    std::set<TypedVar> out;
    collect_free_vars(t, out);
    return out;
}

}  // namespace pbespg
