#include "lexer.hpp"

#include <cctype>
#include <map>

namespace pbespg {

const char* token_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::KwSort: return "'sort'";
        case Tok::KwPbes: return "'pbes'";
        case Tok::KwInit: return "'init'";
        case Tok::KwMu: return "'mu'";
        case Tok::KwNu: return "'nu'";
        case Tok::KwForall: return "'forall'";
        case Tok::KwExists: return "'exists'";
        case Tok::KwVal: return "'val'";
        case Tok::KwTrue: return "'true'";
        case Tok::KwFalse: return "'false'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::Colon: return "':'";
        case Tok::Dot: return "'.'";
        case Tok::Assign: return "'='";
        case Tok::Pipe: return "'|'";
        case Tok::Arrow: return "'=>'";
        case Tok::AndAnd: return "'&&'";
        case Tok::OrOr: return "'||'";
        case Tok::Bang: return "'!'";
        case Tok::EqEq: return "'=='";
        case Tok::Neq: return "'!='";
        case Tok::Lt: return "'<'";
        case Tok::Leq: return "'<='";
        case Tok::Gt: return "'>'";
        case Tok::Geq: return "'>='";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Hash: return "'#'";
        case Tok::Snoc: return "'<|'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& text) {
    static const std::map<std::string, Tok> keywords = {
        {"sort", Tok::KwSort}, {"pbes", Tok::KwPbes}, {"init", Tok::KwInit},
        {"mu", Tok::KwMu},     {"nu", Tok::KwNu},     {"forall", Tok::KwForall},
        {"exists", Tok::KwExists}, {"val", Tok::KwVal},
        {"true", Tok::KwTrue}, {"false", Tok::KwFalse},
    };

    std::vector<Token> out;
    uint32_t line = 1, col = 1;
    size_t i = 0;
    auto loc = [&] { return SourceLoc{line, col}; };
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto push = [&](Tok t, SourceLoc l, std::string s) {
        out.push_back(Token{t, std::move(s), l});
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        SourceLoc l = loc();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                advance(1);
            std::string word = text.substr(start, i - start);
            auto kw = keywords.find(word);
            push(kw == keywords.end() ? Tok::Ident : kw->second, l, std::move(word));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                advance(1);
            push(Tok::Number, l, text.substr(start, i - start));
            continue;
        }
        auto two = [&](char second) {
            return i + 1 < text.size() && text[i + 1] == second;
        };
        switch (c) {
            case '(': push(Tok::LParen, l, "("); advance(1); continue;
            case ')': push(Tok::RParen, l, ")"); advance(1); continue;
            case '[': push(Tok::LBracket, l, "["); advance(1); continue;
            case ']': push(Tok::RBracket, l, "]"); advance(1); continue;
            case ',': push(Tok::Comma, l, ","); advance(1); continue;
            case ';': push(Tok::Semi, l, ";"); advance(1); continue;
            case ':': push(Tok::Colon, l, ":"); advance(1); continue;
            case '.': push(Tok::Dot, l, "."); advance(1); continue;
            case '|':
                if (two('|')) { push(Tok::OrOr, l, "||"); advance(2); }
                else { push(Tok::Pipe, l, "|"); advance(1); }
                continue;
            case '&':
                if (two('&')) { push(Tok::AndAnd, l, "&&"); advance(2); continue; }
                throw ParseError(l, "unexpected '&' (did you mean '&&'?)");
            case '!':
                if (two('=')) { push(Tok::Neq, l, "!="); advance(2); }
                else { push(Tok::Bang, l, "!"); advance(1); }
                continue;
            case '=':
                if (two('>')) { push(Tok::Arrow, l, "=>"); advance(2); }
                else if (two('=')) { push(Tok::EqEq, l, "=="); advance(2); }
                else { push(Tok::Assign, l, "="); advance(1); }
                continue;
            case '<':
                if (two('=')) { push(Tok::Leq, l, "<="); advance(2); }
                else if (two('|')) { push(Tok::Snoc, l, "<|"); advance(2); }
                else { push(Tok::Lt, l, "<"); advance(1); }
                continue;
            case '>':
                if (two('=')) { push(Tok::Geq, l, ">="); advance(2); }
                else { push(Tok::Gt, l, ">"); advance(1); }
                continue;
            case '+': push(Tok::Plus, l, "+"); advance(1); continue;
            case '-': push(Tok::Minus, l, "-"); advance(1); continue;
            case '#': push(Tok::Hash, l, "#"); advance(1); continue;
            default:
                throw ParseError(l, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back(Token{Tok::End, "", loc()});
    return out;
}

}  // namespace pbespg
