#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbespg/formula.hpp"

namespace pbespg {

enum class Fixpoint : uint8_t { Mu, Nu };

inline const char* fixpoint_name(Fixpoint fp) { return fp == Fixpoint::Mu ? "mu" : "nu"; }

struct Equation {
    Fixpoint fixpoint = Fixpoint::Nu;
    std::string name;
    std::vector<TypedVar> params;
    FormulaPtr rhs;
    SourceLoc loc;

    std::optional<Sort> param_sort(const std::string& param) const;
};

struct Pbes {
    std::vector<EnumDeclPtr> sort_decls;  // declaration order, for printing
    std::vector<Equation> equations;
    std::string init_name;
    std::vector<TermPtr> init_args;

    int equation_index(const std::string& name) const;  // -1 if absent
    const Equation* find_equation(const std::string& name) const;
};

// Maximal run of consecutive equations with the same fixpoint operator.
// Priorities: 0 for a leading nu, 1 for a leading mu, +1 per block boundary.
struct Block {
    size_t index = 0;
    Fixpoint fixpoint = Fixpoint::Nu;
    size_t first = 0;  // inclusive equation range
    size_t last = 0;
    uint32_t priority = 0;
};

std::vector<Block> blocks(const Pbes& p);
// Priority of each equation, by block membership.
std::vector<uint32_t> equation_priorities(const Pbes& p);

struct Diagnostic {
    SourceLoc loc;
    std::string rule;  // "duplicate-lhs", "negative-occurrence", ...
    std::string message;

    std::string str() const;
};

// Empty iff all Pbes/Equation invariants hold. Diagnostics are the result;
// never throws.
std::vector<Diagnostic> validate(const Pbes& p);

// Thrown by the frontend when a parsed system fails validate().
struct ValidationError : std::runtime_error {
    std::vector<Diagnostic> diagnostics;
    explicit ValidationError(std::vector<Diagnostic> diags);
};

bool structural_equal(const Pbes& a, const Pbes& b);
// Equality modulo bound-variable names (params and quantifiers).
bool alpha_equal_pbes(const Pbes& a, const Pbes& b);

}  // namespace pbespg
