#include "pbespg/pbes.hpp"

#include <map>

namespace pbespg {

std::optional<Sort> Equation::param_sort(const std::string& param) const {
    for (const TypedVar& v : params)
        if (v.name == param) return v.sort;
    return std::nullopt;
}

int Pbes::equation_index(const std::string& name) const {
    for (size_t i = 0; i < equations.size(); ++i)
        if (equations[i].name == name) return static_cast<int>(i);
    return -1;
}

const Equation* Pbes::find_equation(const std::string& name) const {
    int i = equation_index(name);
    return i < 0 ? nullptr : &equations[i];
}

std::vector<Block> blocks(const Pbes& p) {
    std::vector<Block> out;
    if (p.equations.empty()) return out;
    uint32_t priority = p.equations[0].fixpoint == Fixpoint::Nu ? 0 : 1;
    Block current{0, p.equations[0].fixpoint, 0, 0, priority};
    for (size_t i = 1; i < p.equations.size(); ++i) {
        if (p.equations[i].fixpoint == current.fixpoint) {
            current.last = i;
        } else {
            out.push_back(current);
            ++priority;
            current = Block{out.size(), p.equations[i].fixpoint, i, i, priority};
        }
    }
    out.push_back(current);
    return out;
}

std::vector<uint32_t> equation_priorities(const Pbes& p) {
    std::vector<uint32_t> prio(p.equations.size(), 0);
    for (const Block& b : blocks(p))
        for (size_t i = b.first; i <= b.last; ++i) prio[i] = b.priority;
    return prio;
}

std::string Diagnostic::str() const {
    std::string out;
    if (loc.valid()) out += loc.str() + ": ";
    return out + "[" + rule + "] " + message;
}

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : std::runtime_error(diags.empty() ? "validation failed"
                                       : diags.front().str() +
                                             (diags.size() > 1
                                                  ? " (+" + std::to_string(diags.size() - 1) +
                                                        " more)"
                                                  : "")),
      diagnostics(std::move(diags)) {}

namespace {

// Negation and the left side of => must not cover predicate variables,
// otherwise the system is not in positive form.
void check_positive(const FormulaPtr& f, const Equation& eq,
                    std::vector<Diagnostic>& out, bool under_neg) {
    switch (f->kind()) {
        case Formula::Kind::Val:
            return;
        case Formula::Kind::PredVar:
            if (under_neg)
                out.push_back({f->loc().valid() ? f->loc() : eq.loc, "negative-occurrence",
                               "predicate variable " + f->var_name() +
                                   " occurs under negation in equation " + eq.name});
            return;
        case Formula::Kind::Neg:
            check_positive(f->left(), eq, out, true);
            return;
        case Formula::Kind::Implies:
            check_positive(f->left(), eq, out, true);
            check_positive(f->right(), eq, out, under_neg);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            check_positive(f->left(), eq, out, under_neg);
            check_positive(f->right(), eq, out, under_neg);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            check_positive(f->body(), eq, out, under_neg);
            return;
    }
}

void check_calls(const Pbes& p, const FormulaPtr& f, const Equation& eq,
                 std::vector<Diagnostic>& out) {
    switch (f->kind()) {
        case Formula::Kind::Val:
            return;
        case Formula::Kind::PredVar: {
            SourceLoc loc = f->loc().valid() ? f->loc() : eq.loc;
            const Equation* target = p.find_equation(f->var_name());
            if (!target) {
                out.push_back({loc, "undeclared-variable",
                               "predicate variable " + f->var_name() +
                                   " has no equation"});
                return;
            }
            if (target->params.size() != f->args().size()) {
                out.push_back({loc, "arity-mismatch",
                               f->var_name() + " expects " +
                                   std::to_string(target->params.size()) +
                                   " arguments, got " + std::to_string(f->args().size())});
                return;
            }
            for (size_t i = 0; i < f->args().size(); ++i)
                if (f->args()[i]->sort() != target->params[i].sort)
                    out.push_back({loc, "argument-sort",
                                   "argument " + std::to_string(i + 1) + " of " +
                                       f->var_name() + " has sort " +
                                       f->args()[i]->sort().str() + ", expected " +
                                       target->params[i].sort.str()});
            return;
        }
        case Formula::Kind::Neg:
            check_calls(p, f->left(), eq, out);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            check_calls(p, f->left(), eq, out);
            check_calls(p, f->right(), eq, out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            check_calls(p, f->body(), eq, out);
            return;
    }
}

}  // namespace

std::vector<Diagnostic> validate(const Pbes& p) {
    std::vector<Diagnostic> out;
    std::map<std::string, size_t> seen;
    for (size_t i = 0; i < p.equations.size(); ++i) {
        const Equation& eq = p.equations[i];
        auto [it, fresh] = seen.emplace(eq.name, i);
        if (!fresh)
            out.push_back({eq.loc, "duplicate-lhs",
                           "predicate variable " + eq.name +
                               " occurs more than once as a left-hand side"});
        for (size_t a = 0; a < eq.params.size(); ++a)
            for (size_t b = a + 1; b < eq.params.size(); ++b)
                if (eq.params[a].name == eq.params[b].name)
                    out.push_back({eq.loc, "duplicate-param",
                                   "parameter " + eq.params[a].name +
                                       " declared twice in equation " + eq.name});
        if (!eq.rhs) {
            out.push_back({eq.loc, "missing-rhs", "equation " + eq.name + " has no rhs"});
            continue;
        }
        check_positive(eq.rhs, eq, out, false);
        check_calls(p, eq.rhs, eq, out);
        // Free data variables of the rhs must be parameters of the equation.
        for (const TypedVar& v : free_vars(eq.rhs)) {
            auto s = eq.param_sort(v.name);
            if (!s || *s != v.sort)
                out.push_back({eq.loc, "unbound-data-variable",
                               "data variable " + v.name + ":" + v.sort.str() +
                                   " is not a parameter of equation " + eq.name});
        }
    }
    // init
    const Equation* init = p.find_equation(p.init_name);
    if (!init) {
        out.push_back({{}, "init-undeclared",
                       "init references undeclared variable " + p.init_name});
    } else {
        if (init->params.size() != p.init_args.size())
            out.push_back({{}, "arity-mismatch",
                           "init " + p.init_name + " expects " +
                               std::to_string(init->params.size()) + " arguments, got " +
                               std::to_string(p.init_args.size())});
        else
            for (size_t i = 0; i < p.init_args.size(); ++i) {
                if (p.init_args[i]->sort() != init->params[i].sort)
                    out.push_back({{}, "argument-sort",
                                   "init argument " + std::to_string(i + 1) +
                                       " has sort " + p.init_args[i]->sort().str() +
                                       ", expected " + init->params[i].sort.str()});
                if (!free_vars(p.init_args[i]).empty())
                    out.push_back({{}, "init-not-closed",
                                   "init argument " + std::to_string(i + 1) +
                                       " contains free variables"});
            }
    }
    return out;
}

bool structural_equal(const Pbes& a, const Pbes& b) {
    if (a.equations.size() != b.equations.size()) return false;
    for (size_t i = 0; i < a.equations.size(); ++i) {
        const Equation &ea = a.equations[i], &eb = b.equations[i];
        if (ea.fixpoint != eb.fixpoint || ea.name != eb.name) return false;
        if (ea.params.size() != eb.params.size()) return false;
        for (size_t j = 0; j < ea.params.size(); ++j)
            if (!(ea.params[j] == eb.params[j])) return false;
        if (!structural_equal(ea.rhs, eb.rhs)) return false;
    }
    if (a.init_name != b.init_name || a.init_args.size() != b.init_args.size())
        return false;
    for (size_t i = 0; i < a.init_args.size(); ++i)
        if (!structural_equal(a.init_args[i], b.init_args[i])) return false;
    return true;
}

bool alpha_equal_pbes(const Pbes& a, const Pbes& b) {
    if (a.equations.size() != b.equations.size()) return false;
    for (size_t i = 0; i < a.equations.size(); ++i) {
        const Equation &ea = a.equations[i], &eb = b.equations[i];
        if (ea.fixpoint != eb.fixpoint || ea.name != eb.name) return false;
        if (ea.params.size() != eb.params.size()) return false;
        std::vector<TypedVar> pa = ea.params, pb = eb.params;
        for (size_t j = 0; j < pa.size(); ++j)
            if (pa[j].sort != pb[j].sort) return false;
        // Compare rhs with params treated as binders.
        FormulaPtr fa = Formula::forall(pa, ea.rhs);
        FormulaPtr fb = Formula::forall(pb, eb.rhs);
        if (!alpha_equal(fa, fb)) return false;
    }
    if (a.init_name != b.init_name || a.init_args.size() != b.init_args.size())
        return false;
    for (size_t i = 0; i < a.init_args.size(); ++i)
        if (!structural_equal(a.init_args[i], b.init_args[i])) return false;
    return true;
}

}  // namespace pbespg
