#include "rjns/parse.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <utility>

namespace rjns {
namespace {

enum class Tok : std::uint8_t {
    Ident, IntLit,
    KwProcedure, KwInt, KwFrom, KwLoop, KwUntil, KwIf, KwThen, KwElse, KwFi,
    KwLocal, KwDelocal, KwCall, KwUncall, KwSkip, KwSize,
    LParen, RParen, LBracket, RBracket, Comma,
    PlusEq, MinusEq, CaretEq, SwapArrow,
    Plus, Minus, Star, Slash, Percent, StarStar, Amp, Pipe, Caret,
    AmpAmp, PipePipe,
    Eq, Ne, Lt, Le, Gt, Ge,
    Eof,
};

struct Token {
    Tok kind = Tok::Eof;
    std::string_view text;
    SourceSpan span;
    std::uint64_t magnitude = 0;  // for IntLit: unsigned value of the digits
};

Tok keyword_kind(std::string_view word) {
    if (word == "procedure") return Tok::KwProcedure;
    if (word == "int") return Tok::KwInt;
    if (word == "from") return Tok::KwFrom;
    if (word == "loop") return Tok::KwLoop;
    if (word == "until") return Tok::KwUntil;
    if (word == "if") return Tok::KwIf;
    if (word == "then") return Tok::KwThen;
    if (word == "else") return Tok::KwElse;
    if (word == "fi") return Tok::KwFi;
    if (word == "local") return Tok::KwLocal;
    if (word == "delocal") return Tok::KwDelocal;
    if (word == "call") return Tok::KwCall;
    if (word == "uncall") return Tok::KwUncall;
    if (word == "skip") return Tok::KwSkip;
    if (word == "size") return Tok::KwSize;
    return Tok::Ident;
}

struct ParseFailure {
    ParseError error;
};

[[noreturn]] void fail(SourceSpan span, std::string message,
                       std::vector<std::string> expected = {}) {
    throw ParseFailure{ParseError{span, std::move(message), std::move(expected)}};
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            Token t = next_token();
            out.push_back(t);
            if (t.kind == Tok::Eof) break;
        }
        return out;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::uint32_t col_ = 1;

    bool eof() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        for (;;) {
            if (eof()) return;
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!eof() && peek() != '\n') advance();
            } else {
                return;
            }
        }
    }

    SourceSpan here(std::uint32_t length = 1) const {
        return SourceSpan{static_cast<std::uint32_t>(pos_), length, line_, col_};
    }

    Token make(Tok kind, std::size_t start, SourceSpan span) {
        span.length = static_cast<std::uint32_t>(pos_ - start);
        return Token{kind, src_.substr(start, pos_ - start), span, 0};
    }

    Token next_token() {
        if (eof()) return Token{Tok::Eof, {}, here(0), 0};
        SourceSpan span = here();
        std::size_t start = pos_;
        char c = peek();

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                advance();
            Token t = make(Tok::Ident, start, span);
            t.kind = keyword_kind(t.text);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t value = 0;
            bool overflow = false;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
                if (value > (UINT64_MAX - digit) / 10) overflow = true;
                value = value * 10 + digit;
                advance();
            }
            Token t = make(Tok::IntLit, start, span);
            if (overflow) fail(t.span, "integer literal out of range");
            t.magnitude = value;
            return t;
        }

        auto two = [&](char a, char b) { return c == a && peek(1) == b; };
        if (c == '<' && peek(1) == '=' && peek(2) == '>') {
            advance(); advance(); advance();
            return make(Tok::SwapArrow, start, span);
        }
        if (two('+', '=')) { advance(); advance(); return make(Tok::PlusEq, start, span); }
        if (two('-', '=')) { advance(); advance(); return make(Tok::MinusEq, start, span); }
        if (two('^', '=')) { advance(); advance(); return make(Tok::CaretEq, start, span); }
        if (two('*', '*')) { advance(); advance(); return make(Tok::StarStar, start, span); }
        if (two('&', '&')) { advance(); advance(); return make(Tok::AmpAmp, start, span); }
        if (two('|', '|')) { advance(); advance(); return make(Tok::PipePipe, start, span); }
        if (two('!', '=')) { advance(); advance(); return make(Tok::Ne, start, span); }
        if (two('<', '=')) { advance(); advance(); return make(Tok::Le, start, span); }
        if (two('>', '=')) { advance(); advance(); return make(Tok::Ge, start, span); }

        switch (c) {
            case '(': advance(); return make(Tok::LParen, start, span);
            case ')': advance(); return make(Tok::RParen, start, span);
            case '[': advance(); return make(Tok::LBracket, start, span);
            case ']': advance(); return make(Tok::RBracket, start, span);
            case ',': advance(); return make(Tok::Comma, start, span);
            case '+': advance(); return make(Tok::Plus, start, span);
            case '-': advance(); return make(Tok::Minus, start, span);
            case '*': advance(); return make(Tok::Star, start, span);
            case '/': advance(); return make(Tok::Slash, start, span);
            case '%': advance(); return make(Tok::Percent, start, span);
            case '&': advance(); return make(Tok::Amp, start, span);
            case '|': advance(); return make(Tok::Pipe, start, span);
            case '^': advance(); return make(Tok::Caret, start, span);
            case '=': advance(); return make(Tok::Eq, start, span);
            case '<': advance(); return make(Tok::Lt, start, span);
            case '>': advance(); return make(Tok::Gt, start, span);
            default:
                fail(span, std::string("unexpected character '") + c + "'");
        }
    }
};

constexpr std::uint64_t kInt64MinMagnitude = 9223372036854775808ull;

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Program parse_program() {
        Program prog;
        while (!at(Tok::Eof)) {
            prog.procedures.push_back(parse_procedure());
        }
        return prog;
    }

private:
    std::vector<Token> toks_;
    std::size_t idx_ = 0;

    const Token& cur() const { return toks_[idx_]; }
    const Token& ahead(std::size_t n) const {
        std::size_t i = idx_ + n;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at(Tok k) const { return cur().kind == k; }
    Token bump() { return toks_[idx_++]; }

    Token expect(Tok k, const char* what) {
        if (!at(k)) unexpected({what});
        return bump();
    }

    [[noreturn]] void unexpected(std::vector<std::string> expected) {
        std::string got = at(Tok::Eof) ? "end of input"
                                       : "'" + std::string(cur().text) + "'";
        fail(cur().span, "unexpected " + got, std::move(expected));
    }

    // --- procedures ---

    Procedure parse_procedure() {
        Token kw = expect(Tok::KwProcedure, "'procedure'");
        Token name = expect(Tok::Ident, "procedure name");
        expect(Tok::LParen, "'('");
        std::vector<Param> params;
        if (!at(Tok::RParen)) {
            params.push_back(parse_param());
            while (at(Tok::Comma)) {
                bump();
                params.push_back(parse_param());
            }
        }
        expect(Tok::RParen, "')'");
        StmtList body = parse_stmt_list();
        Procedure p;
        p.name = std::string(name.text);
        p.params = std::move(params);
        p.body = std::move(body);
        p.span = kw.span;
        return p;
    }

    Param parse_param() {
        expect(Tok::KwInt, "'int'");
        Token name = expect(Tok::Ident, "parameter name");
        Param param{std::string(name.text), ParamKind::Scalar, name.span};
        if (at(Tok::LBracket)) {
            bump();
            expect(Tok::RBracket, "']'");
            param.kind = ParamKind::Array;
        }
        return param;
    }

    // --- statements ---

    bool at_stmt_start() const {
        switch (cur().kind) {
            case Tok::Ident:
            case Tok::KwIf:
            case Tok::KwFrom:
            case Tok::KwLocal:
            case Tok::KwCall:
            case Tok::KwUncall:
            case Tok::KwSkip:
                return true;
            default:
                return false;
        }
    }

    StmtList parse_stmt_list() {
        StmtList list;
        while (at_stmt_start()) list.push_back(parse_stmt());
        return list;
    }

    StmtPtr parse_stmt() {
        switch (cur().kind) {
            case Tok::Ident: return parse_update_or_swap();
            case Tok::KwIf: return parse_if();
            case Tok::KwFrom: return parse_loop();
            case Tok::KwLocal: return parse_local();
            case Tok::KwCall: return parse_call(false);
            case Tok::KwUncall: return parse_call(true);
            case Tok::KwSkip: {
                Token kw = bump();
                return make_stmt(Stmt::Skip{}, kw.span);
            }
            default:
                unexpected({"statement"});
        }
    }

    LValue parse_lvalue() {
        Token name = expect(Tok::Ident, "variable name");
        LValue lv{std::string(name.text), nullptr, name.span};
        if (at(Tok::LBracket)) {
            bump();
            lv.index = parse_expr();
            expect(Tok::RBracket, "']'");
        }
        return lv;
    }

    StmtPtr parse_update_or_swap() {
        LValue target = parse_lvalue();
        SourceSpan span = target.span;
        switch (cur().kind) {
            case Tok::PlusEq:
            case Tok::MinusEq:
            case Tok::CaretEq: {
                Tok k = bump().kind;
                UpdateOp op = k == Tok::PlusEq   ? UpdateOp::Add
                              : k == Tok::MinusEq ? UpdateOp::Sub
                                                  : UpdateOp::Xor;
                ExprPtr rhs = parse_expr();
                return make_stmt(Stmt::Update{std::move(target), op, std::move(rhs)}, span);
            }
            case Tok::SwapArrow: {
                bump();
                LValue rhs = parse_lvalue();
                return make_stmt(Stmt::Swap{std::move(target), std::move(rhs)}, span);
            }
            default:
                unexpected({"'+='", "'-='", "'^='", "'<=>'"});
        }
    }

    StmtPtr parse_if() {
        Token kw = bump();
        ExprPtr test = parse_expr();
        expect(Tok::KwThen, "'then'");
        StmtList then_body = parse_stmt_list();
        StmtList else_body;
        if (at(Tok::KwElse)) {
            bump();
            else_body = parse_stmt_list();
        }
        expect(Tok::KwFi, "'fi'");
        ExprPtr merge = parse_expr();
        return make_stmt(
            Stmt::If{std::move(test), std::move(then_body), std::move(else_body), std::move(merge)},
            kw.span);
    }

    StmtPtr parse_loop() {
        Token kw = bump();
        ExprPtr entry = parse_expr();
        expect(Tok::KwLoop, "'loop'");
        StmtList body = parse_stmt_list();
        expect(Tok::KwUntil, "'until'");
        ExprPtr exit = parse_expr();
        return make_stmt(Stmt::Loop{std::move(entry), std::move(body), std::move(exit)}, kw.span);
    }

    StmtPtr parse_local() {
        Token kw = bump();
        expect(Tok::KwInt, "'int'");
        Token var = expect(Tok::Ident, "local variable name");
        expect(Tok::Eq, "'='");
        ExprPtr init = parse_expr();
        StmtList body = parse_stmt_list();
        expect(Tok::KwDelocal, "'delocal'");
        expect(Tok::KwInt, "'int'");
        Token var2 = expect(Tok::Ident, "local variable name");
        if (var2.text != var.text) {
            fail(var2.span, "delocal of '" + std::string(var2.text) +
                                "' does not match local '" + std::string(var.text) + "'");
        }
        expect(Tok::Eq, "'='");
        ExprPtr fin = parse_expr();
        return make_stmt(Stmt::Local{std::string(var.text), std::move(init), std::move(body),
                                     std::move(fin)},
                         kw.span);
    }

    StmtPtr parse_call(bool is_uncall) {
        Token kw = bump();
        Token name = expect(Tok::Ident, "procedure name");
        expect(Tok::LParen, "'('");
        std::vector<std::string> args;
        if (!at(Tok::RParen)) {
            args.emplace_back(expect(Tok::Ident, "argument name").text);
            while (at(Tok::Comma)) {
                bump();
                args.emplace_back(expect(Tok::Ident, "argument name").text);
            }
        }
        expect(Tok::RParen, "')'");
        Stmt::CallStmt call;
        call.proc = std::string(name.text);
        call.args = std::move(args);
        call.is_uncall = is_uncall;
        return make_stmt(std::move(call), kw.span);
    }

    // --- expressions ---

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (at(Tok::PipePipe)) {
            SourceSpan span = bump().span;
            lhs = make_binary(BinaryOp::Or, std::move(lhs), parse_and(), span);
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_cmp();
        while (at(Tok::AmpAmp)) {
            SourceSpan span = bump().span;
            lhs = make_binary(BinaryOp::And, std::move(lhs), parse_cmp(), span);
        }
        return lhs;
    }

    static std::optional<BinaryOp> cmp_op(Tok k) {
        switch (k) {
            case Tok::Eq: return BinaryOp::Eq;
            case Tok::Ne: return BinaryOp::Ne;
            case Tok::Lt: return BinaryOp::Lt;
            case Tok::Le: return BinaryOp::Le;
            case Tok::Gt: return BinaryOp::Gt;
            case Tok::Ge: return BinaryOp::Ge;
            default: return std::nullopt;
        }
    }

    ExprPtr parse_cmp() {
        ExprPtr lhs = parse_add();
        while (auto op = cmp_op(cur().kind)) {
            SourceSpan span = bump().span;
            lhs = make_binary(*op, std::move(lhs), parse_add(), span);
        }
        return lhs;
    }

    ExprPtr parse_add() {
        ExprPtr lhs = parse_mul();
        for (;;) {
            BinaryOp op;
            switch (cur().kind) {
                case Tok::Plus: op = BinaryOp::Add; break;
                case Tok::Minus: op = BinaryOp::Sub; break;
                case Tok::Pipe: op = BinaryOp::BitOr; break;
                case Tok::Caret: op = BinaryOp::BitXor; break;
                default: return lhs;
            }
            SourceSpan span = bump().span;
            lhs = make_binary(op, std::move(lhs), parse_mul(), span);
        }
    }

    ExprPtr parse_mul() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            BinaryOp op;
            switch (cur().kind) {
                case Tok::Star: op = BinaryOp::Mul; break;
                case Tok::Slash: op = BinaryOp::Div; break;
                case Tok::Percent: op = BinaryOp::Mod; break;
                case Tok::Amp: op = BinaryOp::BitAnd; break;
                default: return lhs;
            }
            SourceSpan span = bump().span;
            lhs = make_binary(op, std::move(lhs), parse_unary(), span);
        }
    }

    ExprPtr parse_unary() {
        if (!at(Tok::Minus)) return parse_power();
        SourceSpan span = bump().span;
        // INT64_MIN is only writable as a minus applied directly to its
        // magnitude; the bare literal would be out of range.
        if (at(Tok::IntLit) && cur().magnitude == kInt64MinMagnitude &&
            ahead(1).kind != Tok::StarStar) {
            Token lit = bump();
            return make_int(std::numeric_limits<Int>::min(), lit.span);
        }
        ExprPtr operand = parse_unary();
        // Fold a negated literal so `-1` round-trips as a single node.
        if (const auto* lit = std::get_if<Expr::IntLit>(&operand->node)) {
            return make_int(
                static_cast<Int>(0ull - static_cast<std::uint64_t>(lit->value)), span);
        }
        return make_neg(std::move(operand), span);
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (at(Tok::StarStar)) {
            SourceSpan span = bump().span;
            // Right-associative; the exponent may carry a unary minus.
            return make_binary(BinaryOp::Pow, std::move(base), parse_unary(), span);
        }
        return base;
    }

    ExprPtr parse_atom() {
        switch (cur().kind) {
            case Tok::IntLit: {
                Token lit = bump();
                if (lit.magnitude > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
                    fail(lit.span, "integer literal out of range");
                return make_int(static_cast<Int>(lit.magnitude), lit.span);
            }
            case Tok::Ident: {
                Token name = bump();
                if (at(Tok::LBracket)) {
                    bump();
                    ExprPtr index = parse_expr();
                    expect(Tok::RBracket, "']'");
                    return make_index(std::string(name.text), std::move(index), name.span);
                }
                return make_var(std::string(name.text), name.span);
            }
            case Tok::KwSize: {
                Token kw = bump();
                expect(Tok::LParen, "'('");
                Token name = expect(Tok::Ident, "array name");
                expect(Tok::RParen, "')'");
                return make_size_of(std::string(name.text), kw.span);
            }
            case Tok::LParen: {
                bump();
                ExprPtr inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                unexpected({"expression"});
        }
    }
};

}  // namespace

ParseResult parse(std::string_view source) {
    try {
        Lexer lexer(source);
        Parser parser(lexer.run());
        ParseResult result;
        result.program = parser.parse_program();
        return result;
    } catch (const ParseFailure& f) {
        ParseResult result;
        result.error = f.error;
        return result;
    }
}

}  // namespace rjns
