#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pbespg {

struct SourceLoc {
    uint32_t line = 0;   // 1-based; 0 means "no location"
    uint32_t column = 0;

    bool valid() const { return line > 0; }
    std::string str() const;
};

// Syntax or lexical error in a .pbes input.
struct ParseError : std::runtime_error {
    SourceLoc loc;
    ParseError(SourceLoc l, const std::string& msg);
};

// Ill-sorted term or formula construction.
struct SortError : std::runtime_error {
    explicit SortError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure while evaluating a data term (head of [], Nat overflow, unbound
// variable under a closed-evaluation request).
struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A quantified Nat or List variable without an extractable finite bound.
struct UnboundedQuantifierError : std::runtime_error {
    std::string variable;
    explicit UnboundedQuantifierError(const std::string& var);
};

// to_ppg called on an equation outside BQNF.
struct NotBqnfError : std::runtime_error {
    std::string path;
    explicit NotBqnfError(const std::string& violation_path);
};

// Instantiation or oracle exceeded its node/variable budget.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pbespg
