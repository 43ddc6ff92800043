#include "rjns/check.hpp"

#include <algorithm>
#include <unordered_set>

#include "rjns/invert.hpp"

namespace rjns {

std::string_view check_error_kind_name(CheckErrorKind kind) {
    switch (kind) {
        case CheckErrorKind::UpdateAlias: return "UpdateAliasError";
        case CheckErrorKind::UnknownName: return "UnknownName";
        case CheckErrorKind::ArityMismatch: return "ArityMismatch";
        case CheckErrorKind::KindMismatch: return "KindMismatch";
        case CheckErrorKind::ArgumentAliasing: return "ArgumentAliasing";
        case CheckErrorKind::DuplicateParameter: return "DuplicateParameter";
        case CheckErrorKind::LocalSelfReference: return "LocalSelfReference";
    }
    return "CheckError";
}

struct CheckerAccess {
    static CheckedProgram make(std::shared_ptr<const Program> prog,
                               std::shared_ptr<const Program> inv) {
        CheckedProgram cp;
        cp.program_ = std::move(prog);
        cp.inverses_ = std::move(inv);
        return cp;
    }
};

int CheckedProgram::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < program_->procedures.size(); ++i) {
        if (program_->procedures[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

namespace {

struct Binding {
    std::string_view name;
    ParamKind kind;
    std::int32_t slot;
};

class Checker {
public:
    explicit Checker(const Program& prog) : prog_(prog) {}

    std::vector<CheckError> run() {
        for (const auto& proc : prog_.procedures) check_procedure(proc);
        return std::move(errors_);
    }

private:
    const Program& prog_;
    std::vector<CheckError> errors_;

    // Lexical scope of the procedure being checked; locals push and pop.
    std::vector<Binding> scope_;
    std::int32_t local_depth_ = 0;
    std::int32_t max_depth_ = 0;
    std::int32_t param_count_ = 0;

    void error(CheckErrorKind kind, SourceSpan span, std::string message) {
        errors_.push_back(CheckError{kind, span, std::move(message)});
    }

    const Binding* lookup(std::string_view name) const {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
            if (it->name == name) return &*it;
        }
        return nullptr;
    }

    void check_procedure(const Procedure& proc) {
        scope_.clear();
        local_depth_ = 0;
        max_depth_ = 0;
        param_count_ = static_cast<std::int32_t>(proc.params.size());

        for (std::size_t i = 0; i < proc.params.size(); ++i) {
            const Param& p = proc.params[i];
            if (lookup(p.name)) {
                error(CheckErrorKind::DuplicateParameter, p.span,
                      "duplicate parameter '" + p.name + "' in procedure '" + proc.name + "'");
                continue;
            }
            scope_.push_back(Binding{p.name, p.kind, static_cast<std::int32_t>(i)});
        }

        check_stmts(proc.body);
        proc.frame_size = param_count_ + max_depth_;
    }

    void check_stmts(const StmtList& body) {
        for (const auto& s : body) check_stmt(*s);
    }

    // Resolves a name used as a scalar value; reports and returns nullptr on
    // failure.
    const Binding* resolve(std::string_view name, SourceSpan span, ParamKind want,
                           const char* use) {
        const Binding* b = lookup(name);
        if (!b) {
            error(CheckErrorKind::UnknownName, span,
                  "unknown name '" + std::string(name) + "'");
            return nullptr;
        }
        if (b->kind != want) {
            error(CheckErrorKind::KindMismatch, span,
                  std::string(b->kind == ParamKind::Array ? "array '" : "scalar '") +
                      std::string(name) + "' cannot be used as " + use);
            return nullptr;
        }
        return b;
    }

    void check_expr(const Expr& e) {
        std::visit(
            [this, &e](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Expr::Var>) {
                    if (const Binding* b =
                            resolve(n.name, e.span, ParamKind::Scalar, "a scalar value")) {
                        n.slot = b->slot;
                    }
                } else if constexpr (std::is_same_v<T, Expr::Index>) {
                    if (const Binding* b =
                            resolve(n.array, e.span, ParamKind::Array, "an indexed array")) {
                        n.slot = b->slot;
                    }
                    check_expr(*n.index);
                } else if constexpr (std::is_same_v<T, Expr::SizeOf>) {
                    if (const Binding* b =
                            resolve(n.array, e.span, ParamKind::Array, "size(...) operand")) {
                        n.slot = b->slot;
                    }
                } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                    check_expr(*n.operand);
                } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                    check_expr(*n.lhs);
                    check_expr(*n.rhs);
                }
            },
            e.node);
    }

    void check_lvalue(const LValue& lv) {
        ParamKind want = lv.index ? ParamKind::Array : ParamKind::Scalar;
        if (const Binding* b = resolve(lv.name, lv.span, want,
                                       lv.index ? "an indexed array" : "an updatable scalar")) {
            lv.slot = b->slot;
        }
        if (lv.index) check_expr(*lv.index);
    }

    static bool occurs(const Expr& e, std::string_view name) {
        return std::visit(
            [&name](const auto& n) -> bool {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Expr::Var>) {
                    return n.name == name;
                } else if constexpr (std::is_same_v<T, Expr::Index>) {
                    return n.array == name || occurs(*n.index, name);
                } else if constexpr (std::is_same_v<T, Expr::SizeOf>) {
                    return n.array == name;
                } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                    return occurs(*n.operand, name);
                } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                    return occurs(*n.lhs, name) || occurs(*n.rhs, name);
                } else {
                    return false;
                }
            },
            e.node);
    }

    void check_update_restriction(const LValue& target, const Expr& rhs, SourceSpan span) {
        if (occurs(rhs, target.name)) {
            error(CheckErrorKind::UpdateAlias, span,
                  "updated variable '" + target.name + "' occurs in the right-hand side");
        }
        if (target.index && occurs(*target.index, target.name)) {
            error(CheckErrorKind::UpdateAlias, span,
                  "updated array '" + target.name + "' occurs in its own index expression");
        }
    }

    void check_stmt(const Stmt& s) {
        std::visit(
            [this, &s](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Stmt::Update>) {
                    check_lvalue(n.target);
                    check_expr(*n.rhs);
                    check_update_restriction(n.target, *n.rhs, s.span);
                } else if constexpr (std::is_same_v<T, Stmt::Swap>) {
                    check_lvalue(n.lhs);
                    check_lvalue(n.rhs);
                    // A swapped cell's variable may not steer either index,
                    // or the swap would not be its own inverse.
                    for (const LValue* side : {&n.lhs, &n.rhs}) {
                        for (const LValue* idx : {&n.lhs, &n.rhs}) {
                            if (idx->index && occurs(*idx->index, side->name)) {
                                error(CheckErrorKind::UpdateAlias, s.span,
                                      "swapped variable '" + side->name +
                                          "' occurs in an index expression of the swap");
                            }
                        }
                    }
                } else if constexpr (std::is_same_v<T, Stmt::If>) {
                    check_expr(*n.test);
                    check_stmts(n.then_body);
                    check_stmts(n.else_body);
                    check_expr(*n.merge);
                } else if constexpr (std::is_same_v<T, Stmt::Loop>) {
                    check_expr(*n.entry);
                    check_stmts(n.body);
                    check_expr(*n.exit);
                } else if constexpr (std::is_same_v<T, Stmt::Local>) {
                    // init is evaluated before the variable exists, fin while
                    // it is still bound; neither may mention it, or the
                    // inverted block would change meaning.
                    if (occurs(*n.init, n.var)) {
                        error(CheckErrorKind::LocalSelfReference, s.span,
                              "local variable '" + n.var + "' occurs in its own initializer");
                    }
                    if (occurs(*n.fin, n.var)) {
                        error(CheckErrorKind::LocalSelfReference, s.span,
                              "local variable '" + n.var + "' occurs in its delocal expression");
                    }
                    check_expr(*n.init);
                    n.slot = param_count_ + local_depth_;
                    scope_.push_back(Binding{n.var, ParamKind::Scalar, n.slot});
                    ++local_depth_;
                    max_depth_ = std::max(max_depth_, local_depth_);
                    check_stmts(n.body);
                    check_expr(*n.fin);
                    --local_depth_;
                    scope_.pop_back();
                } else if constexpr (std::is_same_v<T, Stmt::CallStmt>) {
                    check_call(n, s.span);
                } else {
                    static_assert(std::is_same_v<T, Stmt::Skip>);
                }
            },
            s.node);
    }

    void check_call(const Stmt::CallStmt& call, SourceSpan span) {
        const char* verb = call.is_uncall ? "uncall" : "call";
        const Procedure* callee = prog_.find(call.proc);
        if (!callee) {
            error(CheckErrorKind::UnknownName, span,
                  std::string(verb) + " of unknown procedure '" + call.proc + "'");
            return;
        }
        call.proc_index = [&] {
            for (std::size_t i = 0; i < prog_.procedures.size(); ++i) {
                if (&prog_.procedures[i] == callee) return static_cast<std::int32_t>(i);
            }
            return std::int32_t{-1};
        }();
        if (call.args.size() != callee->params.size()) {
            error(CheckErrorKind::ArityMismatch, span,
                  std::string(verb) + " of '" + call.proc + "' passes " +
                      std::to_string(call.args.size()) + " arguments, expected " +
                      std::to_string(callee->params.size()));
            return;
        }
        call.arg_slots.assign(call.args.size(), -1);
        std::unordered_set<std::string_view> seen;
        for (std::size_t i = 0; i < call.args.size(); ++i) {
            const std::string& arg = call.args[i];
            if (!seen.insert(arg).second) {
                error(CheckErrorKind::ArgumentAliasing, span,
                      "argument '" + arg + "' is bound to more than one parameter of '" +
                          call.proc + "'");
            }
            const Binding* b = lookup(arg);
            if (!b) {
                error(CheckErrorKind::UnknownName, span,
                      "unknown name '" + arg + "' in " + verb + " of '" + call.proc + "'");
                continue;
            }
            if (b->kind != callee->params[i].kind) {
                error(CheckErrorKind::KindMismatch, span,
                      "argument '" + arg + "' of " + verb + " '" + call.proc + "' must be " +
                          (callee->params[i].kind == ParamKind::Array ? "an array" : "a scalar"));
                continue;
            }
            call.arg_slots[i] = b->slot;
        }
    }
};

}  // namespace

CheckResult check(Program program) {
    CheckResult result;
    Checker checker(program);
    result.errors = checker.run();
    if (!result.errors.empty()) return result;

    auto prog = std::make_shared<const Program>(std::move(program));
    auto inv = std::make_shared<const Program>(invert_program(*prog));
    result.program = CheckerAccess::make(std::move(prog), std::move(inv));
    return result;
}

}  // namespace rjns
