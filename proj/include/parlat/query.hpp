// Small expression language for space-algebra queries:
//
//   atoms      Lp(3-)  L(3,inf)  W(3/2,5)
//   operators  x'  (dual, postfix; dual(x) also accepted)
//              M(x), Mconv(x)
//              x & y (meet), x | y (join), x <= y (inclusion)
//
// Precedence: ' > M/Mconv > & > | > <=; parentheses always accepted.
// Parse errors carry the byte offset and the expected-token set.
#pragma once

#include "parlat/space.hpp"

#include <memory>
#include <string>
#include <variant>

namespace parlat {

struct ParseError {
    std::size_t offset = 0;
    std::string message;
    std::string expected;
};

struct EvalError {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::string message;
};

struct QueryAst {
    enum class Kind { Atom, Dual, Mult, Conv, Meet, Join, Leq };
    Kind kind = Kind::Atom;
    SpacePoint atom;
    std::unique_ptr<QueryAst> lhs;  // sole child for unary nodes
    std::unique_ptr<QueryAst> rhs;
    std::size_t begin = 0;  // byte span in the source text
    std::size_t end = 0;
};

// Throws ParseError. Input capped at 4096 bytes.
std::unique_ptr<QueryAst> parse_query(std::string_view text);

// Canonical text; parse(print(ast)) reproduces the AST.
std::string print_query(const QueryAst& ast);

using QueryValue = std::variant<SpacePoint, bool>;

// Throws EvalError on variant mismatches and other type errors.
QueryValue eval_query(const QueryAst& ast, TopMode mode = TopMode::Infinity);

std::string format_query_value(const QueryValue& v);

}  // namespace parlat
