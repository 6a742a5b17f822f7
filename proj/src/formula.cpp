#include "pbespg/formula.hpp"

#include <map>

#include "pbespg/errors.hpp"

namespace pbespg {

FormulaPtr Formula::val(TermPtr term) {
    if (!term->sort().is_bool())
        throw SortError("val(...) requires a Bool term, got " + term->sort().str());
    auto f = make();
    f->kind_ = Kind::Val;
    f->term_ = std::move(term);
    return f;
}

FormulaPtr Formula::pred_var(std::string name, std::vector<TermPtr> args, SourceLoc loc) {
    auto f = make();
    f->kind_ = Kind::PredVar;
    f->name_ = std::move(name);
    f->args_ = std::move(args);
    f->loc_ = loc;
    return f;
}

FormulaPtr Formula::neg(FormulaPtr child) {
    auto f = make();
    f->kind_ = Kind::Neg;
    f->left_ = std::move(child);
    return f;
}

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
    auto f = make();
    f->kind_ = Kind::And;
    f->left_ = std::move(a);
    f->right_ = std::move(b);
    return f;
}

FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
    auto f = make();
    f->kind_ = Kind::Or;
    f->left_ = std::move(a);
    f->right_ = std::move(b);
    return f;
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
    auto f = make();
    f->kind_ = Kind::Implies;
    f->left_ = std::move(a);
    f->right_ = std::move(b);
    return f;
}

FormulaPtr Formula::forall(std::vector<TypedVar> bound, FormulaPtr body) {
    auto f = make();
    f->kind_ = Kind::Forall;
    f->bound_ = std::move(bound);
    f->body_ = std::move(body);
    return f;
}

FormulaPtr Formula::exists(std::vector<TypedVar> bound, FormulaPtr body) {
    auto f = make();
    f->kind_ = Kind::Exists;
    f->bound_ = std::move(bound);
    f->body_ = std::move(body);
    return f;
}

static void collect_occ(const FormulaPtr& f, std::set<std::string>& out) {
    switch (f->kind()) {
        case Formula::Kind::Val:
            return;
        case Formula::Kind::PredVar:
            out.insert(f->var_name());
            return;
        case Formula::Kind::Neg:
            collect_occ(f->left(), out);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            collect_occ(f->left(), out);
            collect_occ(f->right(), out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            collect_occ(f->body(), out);
            return;
    }
}

std::set<std::string> occ(const FormulaPtr& f) {
    std::set<std::string> out;
    collect_occ(f, out);
    return out;
}

static void collect_free(const FormulaPtr& f, std::set<TypedVar>& bound,
                         std::set<TypedVar>& out) {
    switch (f->kind()) {
        case Formula::Kind::Val: {
            std::set<TypedVar> vars = free_vars(f->term());
            for (const TypedVar& v : vars)
                if (!bound.count(v)) out.insert(v);
            return;
        }
        case Formula::Kind::PredVar: {
            for (const TermPtr& a : f->args()) {
                std::set<TypedVar> vars = free_vars(a);
                for (const TypedVar& v : vars)
                    if (!bound.count(v)) out.insert(v);
            }
            return;
        }
        case Formula::Kind::Neg:
            collect_free(f->left(), bound, out);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            collect_free(f->left(), bound, out);
            collect_free(f->right(), bound, out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            std::vector<TypedVar> added;
            for (const TypedVar& v : f->bound())
                if (bound.insert(v).second) added.push_back(v);
            collect_free(f->body(), bound, out);
            for (const TypedVar& v : added) bound.erase(v);
            return;
        }
    }
}

std::set<TypedVar> free_vars(const FormulaPtr& f) {
    std::set<TypedVar> bound, out;
    collect_free(f, bound, out);
    return out;
}

bool is_simple(const FormulaPtr& f) { return occ(f).empty(); }

bool is_simple_quantifier_free(const FormulaPtr& f) {
    switch (f->kind()) {
        case Formula::Kind::Val:
            return true;
        case Formula::Kind::PredVar:
            return false;
        case Formula::Kind::Neg:
            return is_simple_quantifier_free(f->left());
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            return is_simple_quantifier_free(f->left()) &&
                   is_simple_quantifier_free(f->right());
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            return false;
    }
    return false;
}

bool structural_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case Formula::Kind::Val:
            return structural_equal(a->term(), b->term());
        case Formula::Kind::PredVar: {
            if (a->var_name() != b->var_name()) return false;
            if (a->args().size() != b->args().size()) return false;
            for (size_t i = 0; i < a->args().size(); ++i)
                if (!structural_equal(a->args()[i], b->args()[i])) return false;
            return true;
        }
        case Formula::Kind::Neg:
            return structural_equal(a->left(), b->left());
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            return structural_equal(a->left(), b->left()) &&
                   structural_equal(a->right(), b->right());
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            if (a->bound().size() != b->bound().size()) return false;
            for (size_t i = 0; i < a->bound().size(); ++i)
                if (!(a->bound()[i] == b->bound()[i])) return false;
            return structural_equal(a->body(), b->body());
        }
    }
    return false;
}

namespace {

using RenameMap = std::map<std::string, std::string>;

bool alpha_term(const TermPtr& a, const TermPtr& b, const RenameMap& ab) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case DataTerm::Kind::Lit:
            return a->value() == b->value();
        case DataTerm::Kind::Var: {
            auto it = ab.find(a->var_name());
            const std::string& expected = it == ab.end() ? a->var_name() : it->second;
            return expected == b->var_name() && a->sort() == b->sort();
        }
        case DataTerm::Kind::List:
        case DataTerm::Kind::Apply: {
            if (a->kind() == DataTerm::Kind::Apply && a->op() != b->op()) return false;
            if (a->children().size() != b->children().size()) return false;
            for (size_t i = 0; i < a->children().size(); ++i)
                if (!alpha_term(a->children()[i], b->children()[i], ab)) return false;
            return true;
        }
    }
    return false;
}

bool alpha_rec(const FormulaPtr& a, const FormulaPtr& b, RenameMap ab) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case Formula::Kind::Val:
            return alpha_term(a->term(), b->term(), ab);
        case Formula::Kind::PredVar: {
            if (a->var_name() != b->var_name()) return false;
            if (a->args().size() != b->args().size()) return false;
            for (size_t i = 0; i < a->args().size(); ++i)
                if (!alpha_term(a->args()[i], b->args()[i], ab)) return false;
            return true;
        }
        case Formula::Kind::Neg:
            return alpha_rec(a->left(), b->left(), ab);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            return alpha_rec(a->left(), b->left(), ab) &&
                   alpha_rec(a->right(), b->right(), ab);
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            if (a->bound().size() != b->bound().size()) return false;
            for (size_t i = 0; i < a->bound().size(); ++i) {
                const TypedVar& va = a->bound()[i];
                const TypedVar& vb = b->bound()[i];
                if (va.sort != vb.sort) return false;
                ab[va.name] = vb.name;
            }
            return alpha_rec(a->body(), b->body(), ab);
        }
    }
    return false;
}

}  // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
    return alpha_rec(a, b, {});
}

std::vector<FormulaPtr> flatten(const FormulaPtr& f, Formula::Kind kind) {
    std::vector<FormulaPtr> out;
    if (f->kind() == kind) {
        auto lhs = flatten(f->left(), kind);
        out.insert(out.end(), lhs.begin(), lhs.end());
        auto rhs = flatten(f->right(), kind);
        out.insert(out.end(), rhs.begin(), rhs.end());
    } else {
        out.push_back(f);
    }
    return out;
}

FormulaPtr fold(const std::vector<FormulaPtr>& parts, Formula::Kind kind) {
    if (parts.empty())
        return Formula::val(DataTerm::boolean(kind == Formula::Kind::And));
    FormulaPtr acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i)
        acc = kind == Formula::Kind::And ? Formula::conj(acc, parts[i])
                                         : Formula::disj(acc, parts[i]);
    return acc;
}

}  // namespace pbespg
