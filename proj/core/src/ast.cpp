#include "rjns/ast.hpp"

#include <algorithm>

namespace rjns {

std::string_view binary_op_token(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Mod: return "%";
        case BinaryOp::Pow: return "**";
        case BinaryOp::BitAnd: return "&";
        case BinaryOp::BitOr: return "|";
        case BinaryOp::BitXor: return "^";
        case BinaryOp::Eq: return "=";
        case BinaryOp::Ne: return "!=";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::And: return "&&";
        case BinaryOp::Or: return "||";
    }
    return "?";
}

std::string_view update_op_token(UpdateOp op) {
    switch (op) {
        case UpdateOp::Add: return "+=";
        case UpdateOp::Sub: return "-=";
        case UpdateOp::Xor: return "^=";
    }
    return "?";
}

ExprPtr make_int(Int value, SourceSpan span) {
    return std::make_shared<const Expr>(Expr{Expr::IntLit{value}, span});
}

ExprPtr make_var(std::string name, SourceSpan span) {
    return std::make_shared<const Expr>(Expr{Expr::Var{std::move(name)}, span});
}

ExprPtr make_index(std::string array, ExprPtr index, SourceSpan span) {
    return std::make_shared<const Expr>(
        Expr{Expr::Index{std::move(array), std::move(index)}, span});
}

ExprPtr make_size_of(std::string array, SourceSpan span) {
    return std::make_shared<const Expr>(Expr{Expr::SizeOf{std::move(array)}, span});
}

ExprPtr make_neg(ExprPtr operand, SourceSpan span) {
    return std::make_shared<const Expr>(Expr{Expr::Neg{std::move(operand)}, span});
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourceSpan span) {
    return std::make_shared<const Expr>(
        Expr{Expr::Binary{op, std::move(lhs), std::move(rhs)}, span});
}

StmtPtr make_stmt(Stmt::Node node, SourceSpan span) {
    return std::make_shared<const Stmt>(Stmt{std::move(node), span});
}

const Procedure* Program::find(std::string_view name) const {
    for (const auto& p : procedures) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&b](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Expr::IntLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, Expr::Var>) {
                return lhs.name == rhs.name;
            } else if constexpr (std::is_same_v<T, Expr::Index>) {
                return lhs.array == rhs.array && structurally_equal(*lhs.index, *rhs.index);
            } else if constexpr (std::is_same_v<T, Expr::SizeOf>) {
                return lhs.array == rhs.array;
            } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                return structurally_equal(*lhs.operand, *rhs.operand);
            } else {
                static_assert(std::is_same_v<T, Expr::Binary>);
                return lhs.op == rhs.op && structurally_equal(*lhs.lhs, *rhs.lhs) &&
                       structurally_equal(*lhs.rhs, *rhs.rhs);
            }
        },
        a.node);
}

bool structurally_equal(const LValue& a, const LValue& b) {
    if (a.name != b.name) return false;
    if ((a.index == nullptr) != (b.index == nullptr)) return false;
    return a.index == nullptr || structurally_equal(*a.index, *b.index);
}

bool structurally_equal(const StmtList& a, const StmtList& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!structurally_equal(*a[i], *b[i])) return false;
    }
    return true;
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&b](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Stmt::Update>) {
                return lhs.op == rhs.op && structurally_equal(lhs.target, rhs.target) &&
                       structurally_equal(*lhs.rhs, *rhs.rhs);
            } else if constexpr (std::is_same_v<T, Stmt::Swap>) {
                return structurally_equal(lhs.lhs, rhs.lhs) &&
                       structurally_equal(lhs.rhs, rhs.rhs);
            } else if constexpr (std::is_same_v<T, Stmt::If>) {
                return structurally_equal(*lhs.test, *rhs.test) &&
                       structurally_equal(lhs.then_body, rhs.then_body) &&
                       structurally_equal(lhs.else_body, rhs.else_body) &&
                       structurally_equal(*lhs.merge, *rhs.merge);
            } else if constexpr (std::is_same_v<T, Stmt::Loop>) {
                return structurally_equal(*lhs.entry, *rhs.entry) &&
                       structurally_equal(lhs.body, rhs.body) &&
                       structurally_equal(*lhs.exit, *rhs.exit);
            } else if constexpr (std::is_same_v<T, Stmt::Local>) {
                return lhs.var == rhs.var && structurally_equal(*lhs.init, *rhs.init) &&
                       structurally_equal(lhs.body, rhs.body) &&
                       structurally_equal(*lhs.fin, *rhs.fin);
            } else if constexpr (std::is_same_v<T, Stmt::CallStmt>) {
                return lhs.proc == rhs.proc && lhs.is_uncall == rhs.is_uncall &&
                       lhs.args == rhs.args;
            } else {
                static_assert(std::is_same_v<T, Stmt::Skip>);
                return true;
            }
        },
        a.node);
}

bool structurally_equal(const Procedure& a, const Procedure& b) {
    if (a.name != b.name || a.params.size() != b.params.size()) return false;
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        if (a.params[i].name != b.params[i].name || a.params[i].kind != b.params[i].kind)
            return false;
    }
    return structurally_equal(a.body, b.body);
}

bool structurally_equal(const Program& a, const Program& b) {
    if (a.procedures.size() != b.procedures.size()) return false;
    for (std::size_t i = 0; i < a.procedures.size(); ++i) {
        if (!structurally_equal(a.procedures[i], b.procedures[i])) return false;
    }
    return true;
}

void collect_free_names(const Expr& e, std::set<std::string>& out) {
    std::visit(
        [&out](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Var>) {
                out.insert(n.name);
            } else if constexpr (std::is_same_v<T, Expr::Index>) {
                out.insert(n.array);
                collect_free_names(*n.index, out);
            } else if constexpr (std::is_same_v<T, Expr::SizeOf>) {
                out.insert(n.array);
            } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                collect_free_names(*n.operand, out);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                collect_free_names(*n.lhs, out);
                collect_free_names(*n.rhs, out);
            }
        },
        e.node);
}

std::set<std::string> free_names(const Expr& e) {
    std::set<std::string> out;
    collect_free_names(e, out);
    return out;
}

ExprPtr clone(const Expr& e) {
    return std::visit(
        [&e](const auto& n) -> ExprPtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::IntLit>) {
                return make_int(n.value, e.span);
            } else if constexpr (std::is_same_v<T, Expr::Var>) {
                return make_var(n.name, e.span);
            } else if constexpr (std::is_same_v<T, Expr::Index>) {
                return make_index(n.array, clone(*n.index), e.span);
            } else if constexpr (std::is_same_v<T, Expr::SizeOf>) {
                return make_size_of(n.array, e.span);
            } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                return make_neg(clone(*n.operand), e.span);
            } else {
                static_assert(std::is_same_v<T, Expr::Binary>);
                return make_binary(n.op, clone(*n.lhs), clone(*n.rhs), e.span);
            }
        },
        e.node);
}

namespace {
LValue clone_lvalue(const LValue& lv) {
    return LValue{lv.name, lv.index ? clone(*lv.index) : nullptr, lv.span};
}
}  // namespace

StmtPtr clone(const Stmt& s) {
    return std::visit(
        [&s](const auto& n) -> StmtPtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Stmt::Update>) {
                return make_stmt(Stmt::Update{clone_lvalue(n.target), n.op, clone(*n.rhs)},
                                 s.span);
            } else if constexpr (std::is_same_v<T, Stmt::Swap>) {
                return make_stmt(Stmt::Swap{clone_lvalue(n.lhs), clone_lvalue(n.rhs)}, s.span);
            } else if constexpr (std::is_same_v<T, Stmt::If>) {
                return make_stmt(Stmt::If{clone(*n.test), clone(n.then_body),
                                          clone(n.else_body), clone(*n.merge)},
                                 s.span);
            } else if constexpr (std::is_same_v<T, Stmt::Loop>) {
                return make_stmt(Stmt::Loop{clone(*n.entry), clone(n.body), clone(*n.exit)},
                                 s.span);
            } else if constexpr (std::is_same_v<T, Stmt::Local>) {
                return make_stmt(
                    Stmt::Local{n.var, clone(*n.init), clone(n.body), clone(*n.fin)}, s.span);
            } else if constexpr (std::is_same_v<T, Stmt::CallStmt>) {
                Stmt::CallStmt call;
                call.proc = n.proc;
                call.args = n.args;
                call.is_uncall = n.is_uncall;
                return make_stmt(std::move(call), s.span);
            } else {
                static_assert(std::is_same_v<T, Stmt::Skip>);
                return make_stmt(Stmt::Skip{}, s.span);
            }
        },
        s.node);
}

StmtList clone(const StmtList& body) {
    StmtList out;
    out.reserve(body.size());
    for (const auto& s : body) out.push_back(clone(*s));
    return out;
}

Procedure clone(const Procedure& p) {
    Procedure out;
    out.name = p.name;
    out.params = p.params;
    out.body = clone(p.body);
    out.span = p.span;
    return out;
}

Program clone(const Program& p) {
    Program out;
    out.procedures.reserve(p.procedures.size());
    for (const auto& proc : p.procedures) out.procedures.push_back(clone(proc));
    return out;
}

}  // namespace rjns
