#include "rjns/invert.hpp"

#include <algorithm>

namespace rjns {

StmtPtr invert_stmt(const Stmt& s) {
    return std::visit(
        [&s](const auto& n) -> StmtPtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Stmt::Update>) {
                UpdateOp op = n.op;
                if (op == UpdateOp::Add) op = UpdateOp::Sub;
                else if (op == UpdateOp::Sub) op = UpdateOp::Add;
                return make_stmt(Stmt::Update{n.target, op, n.rhs}, s.span);
            } else if constexpr (std::is_same_v<T, Stmt::Swap>) {
                return make_stmt(Stmt::Swap{n.lhs, n.rhs}, s.span);
            } else if constexpr (std::is_same_v<T, Stmt::If>) {
                return make_stmt(Stmt::If{n.merge, invert_stmts(n.then_body),
                                          invert_stmts(n.else_body), n.test},
                                 s.span);
            } else if constexpr (std::is_same_v<T, Stmt::Loop>) {
                return make_stmt(Stmt::Loop{n.exit, invert_stmts(n.body), n.entry}, s.span);
            } else if constexpr (std::is_same_v<T, Stmt::Local>) {
                Stmt::Local inv{n.var, n.fin, invert_stmts(n.body), n.init};
                inv.slot = n.slot;
                return make_stmt(std::move(inv), s.span);
            } else if constexpr (std::is_same_v<T, Stmt::CallStmt>) {
                Stmt::CallStmt inv = n;
                inv.is_uncall = !n.is_uncall;
                return make_stmt(std::move(inv), s.span);
            } else {
                static_assert(std::is_same_v<T, Stmt::Skip>);
                return make_stmt(Stmt::Skip{}, s.span);
            }
        },
        s.node);
}

StmtList invert_stmts(const StmtList& body) {
    StmtList out;
    out.reserve(body.size());
    for (auto it = body.rbegin(); it != body.rend(); ++it) {
        out.push_back(invert_stmt(**it));
    }
    return out;
}

Procedure invert_procedure(const Procedure& p) {
    Procedure inv;
    inv.name = p.name;
    inv.params = p.params;
    inv.body = invert_stmts(p.body);
    inv.span = p.span;
    inv.frame_size = p.frame_size;
    return inv;
}

Program invert_program(const Program& p) {
    Program out;
    out.procedures.reserve(p.procedures.size());
    for (const auto& proc : p.procedures) {
        out.procedures.push_back(invert_procedure(proc));
    }
    return out;
}

}  // namespace rjns
