#pragma once

#include <string>
#include <vector>

#include "pbespg/errors.hpp"

namespace pbespg {

enum class Tok : uint8_t {
    Ident, Number,
    KwSort, KwPbes, KwInit, KwMu, KwNu, KwForall, KwExists, KwVal, KwTrue, KwFalse,
    LParen, RParen, LBracket, RBracket,
    Comma, Semi, Colon, Dot, Assign /* = */, Pipe,
    Arrow /* => */, AndAnd, OrOr, Bang,
    EqEq, Neq, Lt, Leq, Gt, Geq,
    Plus, Minus, Hash, Snoc /* <| */,
    End,
};

struct Token {
    Tok type = Tok::End;
    std::string text;
    SourceLoc loc;
};

const char* token_name(Tok t);

// Tokenises the whole input; "--" comments run to end of line.
std::vector<Token> lex(const std::string& text);

}  // namespace pbespg
