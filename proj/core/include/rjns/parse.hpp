// Concrete syntax: lexer and recursive-descent parser for .jns sources.
//
// Grammar sketch (statement lists are terminated by the enclosing keyword):
//
//   program   := procedure*
//   procedure := "procedure" IDENT "(" [param ("," param)*] ")" stmt*
//   param     := "int" IDENT "[" "]" | "int" IDENT
//   stmt      := lvalue ("+=" | "-=" | "^=") expr
//              | lvalue "<=>" lvalue
//              | "if" expr "then" stmt* ["else" stmt*] "fi" expr
//              | "from" expr "loop" stmt* "until" expr
//              | "local" "int" IDENT "=" expr stmt* "delocal" "int" IDENT "=" expr
//              | ("call" | "uncall") IDENT "(" [IDENT ("," IDENT)*] ")"
//              | "skip"
//
// Precedence, loosest to tightest:
//   || < && < (= != < <= > >=) < (+ - | ^) < (* / % &) < unary- < **
// All binary operators are left-associative except **, which is
// right-associative and binds tighter than unary minus.
//
// `//` starts a line comment. Input is newline-insensitive.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rjns/ast.hpp"

namespace rjns {

struct ParseError {
    SourceSpan span;
    std::string message;                 // includes the offending token text
    std::vector<std::string> expected;   // token descriptions expected here
};

struct ParseResult {
    std::optional<Program> program;
    std::optional<ParseError> error;

    bool ok() const { return program.has_value(); }
};

ParseResult parse(std::string_view source);

}  // namespace rjns
