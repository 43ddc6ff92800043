#include "rjns/pretty.hpp"

#include <string>

namespace rjns {
namespace {

// Binding levels, loosest to tightest. A negative literal prints with a
// leading minus and therefore binds like unary minus.
constexpr int kOr = 1;
constexpr int kAnd = 2;
constexpr int kCmp = 3;
constexpr int kAdd = 4;
constexpr int kMul = 5;
constexpr int kNeg = 6;
constexpr int kPow = 7;
constexpr int kAtom = 8;

int op_level(BinaryOp op) {
    switch (op) {
        case BinaryOp::Or: return kOr;
        case BinaryOp::And: return kAnd;
        case BinaryOp::Eq:
        case BinaryOp::Ne:
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge: return kCmp;
        case BinaryOp::Add:
        case BinaryOp::Sub:
        case BinaryOp::BitOr:
        case BinaryOp::BitXor: return kAdd;
        case BinaryOp::Mul:
        case BinaryOp::Div:
        case BinaryOp::Mod:
        case BinaryOp::BitAnd: return kMul;
        case BinaryOp::Pow: return kPow;
    }
    return kAtom;
}

int expr_level(const Expr& e) {
    if (const auto* lit = std::get_if<Expr::IntLit>(&e.node)) {
        return lit->value < 0 ? kNeg : kAtom;
    }
    if (std::holds_alternative<Expr::Neg>(e.node)) return kNeg;
    if (const auto* bin = std::get_if<Expr::Binary>(&e.node)) return op_level(bin->op);
    return kAtom;
}

void print_expr(std::string& out, const Expr& e, int min_level) {
    bool parens = expr_level(e) < min_level;
    if (parens) out += '(';
    std::visit(
        [&out](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::IntLit>) {
                out += std::to_string(n.value);
            } else if constexpr (std::is_same_v<T, Expr::Var>) {
                out += n.name;
            } else if constexpr (std::is_same_v<T, Expr::Index>) {
                out += n.array;
                out += '[';
                print_expr(out, *n.index, kOr);
                out += ']';
            } else if constexpr (std::is_same_v<T, Expr::SizeOf>) {
                out += "size(";
                out += n.array;
                out += ')';
            } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                out += '-';
                print_expr(out, *n.operand, kNeg);
            } else {
                static_assert(std::is_same_v<T, Expr::Binary>);
                int level = op_level(n.op);
                if (n.op == BinaryOp::Pow) {
                    // Right-associative; the exponent position accepts a
                    // unary minus without parentheses.
                    print_expr(out, *n.lhs, kAtom);
                    out += " ** ";
                    print_expr(out, *n.rhs, kNeg);
                } else {
                    print_expr(out, *n.lhs, level);
                    out += ' ';
                    out += binary_op_token(n.op);
                    out += ' ';
                    print_expr(out, *n.rhs, level + 1);
                }
            }
        },
        e.node);
    if (parens) out += ')';
}

void print_lvalue(std::string& out, const LValue& lv) {
    out += lv.name;
    if (lv.index) {
        out += '[';
        print_expr(out, *lv.index, kOr);
        out += ']';
    }
}

void indent_to(std::string& out, int indent) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
}

void print_stmts(std::string& out, const StmtList& body, int indent);

void print_stmt(std::string& out, const Stmt& s, int indent) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            indent_to(out, indent);
            if constexpr (std::is_same_v<T, Stmt::Update>) {
                print_lvalue(out, n.target);
                out += ' ';
                out += update_op_token(n.op);
                out += ' ';
                print_expr(out, *n.rhs, kOr);
                out += '\n';
            } else if constexpr (std::is_same_v<T, Stmt::Swap>) {
                print_lvalue(out, n.lhs);
                out += " <=> ";
                print_lvalue(out, n.rhs);
                out += '\n';
            } else if constexpr (std::is_same_v<T, Stmt::If>) {
                out += "if ";
                print_expr(out, *n.test, kOr);
                out += " then\n";
                print_stmts(out, n.then_body, indent + 1);
                if (!n.else_body.empty()) {
                    indent_to(out, indent);
                    out += "else\n";
                    print_stmts(out, n.else_body, indent + 1);
                }
                indent_to(out, indent);
                out += "fi ";
                print_expr(out, *n.merge, kOr);
                out += '\n';
            } else if constexpr (std::is_same_v<T, Stmt::Loop>) {
                out += "from ";
                print_expr(out, *n.entry, kOr);
                out += " loop\n";
                print_stmts(out, n.body, indent + 1);
                indent_to(out, indent);
                out += "until ";
                print_expr(out, *n.exit, kOr);
                out += '\n';
            } else if constexpr (std::is_same_v<T, Stmt::Local>) {
                out += "local int ";
                out += n.var;
                out += " = ";
                print_expr(out, *n.init, kOr);
                out += '\n';
                print_stmts(out, n.body, indent + 1);
                indent_to(out, indent);
                out += "delocal int ";
                out += n.var;
                out += " = ";
                print_expr(out, *n.fin, kOr);
                out += '\n';
            } else if constexpr (std::is_same_v<T, Stmt::CallStmt>) {
                out += n.is_uncall ? "uncall " : "call ";
                out += n.proc;
                out += '(';
                for (std::size_t i = 0; i < n.args.size(); ++i) {
                    if (i) out += ", ";
                    out += n.args[i];
                }
                out += ")\n";
            } else {
                static_assert(std::is_same_v<T, Stmt::Skip>);
                out += "skip\n";
            }
        },
        s.node);
}

void print_stmts(std::string& out, const StmtList& body, int indent) {
    for (const auto& s : body) print_stmt(out, *s, indent);
}

void print_procedure(std::string& out, const Procedure& p) {
    out += "procedure ";
    out += p.name;
    out += '(';
    for (std::size_t i = 0; i < p.params.size(); ++i) {
        if (i) out += ", ";
        out += "int ";
        out += p.params[i].name;
        if (p.params[i].kind == ParamKind::Array) out += "[]";
    }
    out += ")\n";
    print_stmts(out, p.body, 1);
}

}  // namespace

std::string pretty(const Expr& e) {
    std::string out;
    print_expr(out, e, kOr);
    return out;
}

std::string pretty(const Procedure& p) {
    std::string out;
    print_procedure(out, p);
    return out;
}

std::string pretty(const Program& p) {
    std::string out;
    for (std::size_t i = 0; i < p.procedures.size(); ++i) {
        if (i) out += '\n';
        print_procedure(out, p.procedures[i]);
    }
    return out;
}

}  // namespace rjns
