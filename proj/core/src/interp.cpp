#include "rjns/interp.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>
#include <utility>

namespace rjns {

std::string_view runtime_error_kind_name(RuntimeErrorKind kind) {
    switch (kind) {
        case RuntimeErrorKind::FiAssertionMismatch: return "FiAssertionMismatch";
        case RuntimeErrorKind::LoopEntryAssertion: return "LoopEntryAssertion";
        case RuntimeErrorKind::DelocalMismatch: return "DelocalMismatch";
        case RuntimeErrorKind::IndexOutOfBounds: return "IndexOutOfBounds";
        case RuntimeErrorKind::DivisionByZero: return "DivisionByZero";
        case RuntimeErrorKind::NegativeExponent: return "NegativeExponent";
        case RuntimeErrorKind::CallAliasing: return "CallAliasing";
        case RuntimeErrorKind::StepLimitExceeded: return "StepLimitExceeded";
    }
    return "RuntimeError";
}

std::optional<Int> FrameInspector::scalar(std::string_view name) const {
    if (!names_) return std::nullopt;
    for (std::size_t i = names_->size(); i-- > frame_start_;) {
        const auto& [n, cell] = (*names_)[i];
        if (n == name && !cell->is_array) return cell->value;
    }
    return std::nullopt;
}

namespace {

struct RuntimeErrorException {
    RuntimeError error;
};

[[noreturn]] void fail(RuntimeErrorKind kind, SourceSpan span, std::string message) {
    throw RuntimeErrorException{RuntimeError{kind, span, std::move(message)}};
}

// 64-bit two's-complement wrapping arithmetic; makes += / -= exact inverses
// and ^= an involution on all inputs.
inline Int wrap_add(Int a, Int b) {
    return static_cast<Int>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}
inline Int wrap_sub(Int a, Int b) {
    return static_cast<Int>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}
inline Int wrap_mul(Int a, Int b) {
    return static_cast<Int>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}
inline Int wrap_neg(Int a) {
    return static_cast<Int>(0ull - static_cast<std::uint64_t>(a));
}

constexpr Int kIntMin = std::numeric_limits<Int>::min();
constexpr int kMaxCallDepth = 1000;

struct Counters {
    std::uint64_t input_reads = 0;
    std::uint64_t input_writes = 0;
    std::int64_t aux_live = 0;
    std::int64_t aux_peak = 0;

    void aux_alloc(std::int64_t cells) {
        aux_live += cells;
        aux_peak = std::max(aux_peak, aux_live);
    }
    void aux_free(std::int64_t cells) { aux_live -= cells; }
};

class Engine {
public:
    Engine(const Program& prog, const Program& inverses, std::uint64_t fuel,
           Counters* counters, const TraceFn* trace)
        : prog_(prog), inverses_(inverses), fuel_(fuel), counters_(counters), trace_(trace) {}

    std::uint64_t steps() const { return steps_; }

    void push_frame_names(const Procedure& proc, Cell* const* frame) {
        if (!trace_) return;
        for (std::size_t i = 0; i < proc.params.size(); ++i) {
            names_.emplace_back(proc.params[i].name, frame[i]);
        }
    }

    void exec_list(const StmtList& body, Cell** frame) {
        for (const auto& s : body) exec(*s, frame);
    }

private:
    const Program& prog_;
    const Program& inverses_;
    std::uint64_t fuel_;
    std::uint64_t steps_ = 0;
    int call_depth_ = 0;
    Counters* counters_;
    const TraceFn* trace_;
    FrameInspector::NameStack names_;
    std::size_t frame_start_ = 0;

    void emit(TraceEvent ev) {
        (*trace_)(ev, FrameInspector(&names_, frame_start_));
    }

    void charge(SourceSpan span) {
        if (++steps_ > fuel_) {
            fail(RuntimeErrorKind::StepLimitExceeded, span,
                 "step limit of " + std::to_string(fuel_) + " exceeded");
        }
    }

    Int eval(const Expr& e, Cell** f) {
        return std::visit(
            [this, &e, f](const auto& n) -> Int {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Expr::IntLit>) {
                    return n.value;
                } else if constexpr (std::is_same_v<T, Expr::Var>) {
                    return f[n.slot]->value;
                } else if constexpr (std::is_same_v<T, Expr::Index>) {
                    Cell* c = f[n.slot];
                    Int idx = eval(*n.index, f);
                    if (idx < 0 || static_cast<std::uint64_t>(idx) >= c->elems.size()) {
                        fail(RuntimeErrorKind::IndexOutOfBounds, e.span,
                             n.array + "[" + std::to_string(idx) + "] is out of bounds (length " +
                                 std::to_string(c->elems.size()) + ")");
                    }
                    if (counters_ && c->role == CellRole::InputArray) ++counters_->input_reads;
                    return c->elems[static_cast<std::size_t>(idx)];
                } else if constexpr (std::is_same_v<T, Expr::SizeOf>) {
                    return static_cast<Int>(f[n.slot]->elems.size());
                } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                    return wrap_neg(eval(*n.operand, f));
                } else {
                    static_assert(std::is_same_v<T, Expr::Binary>);
                    return eval_binary(n, e.span, f);
                }
            },
            e.node);
    }

    Int eval_binary(const Expr::Binary& n, SourceSpan span, Cell** f) {
        // Short-circuit forms decide on the left operand alone; the right
        // operand is then never evaluated and cannot fault.
        if (n.op == BinaryOp::And) {
            if (eval(*n.lhs, f) == 0) return 0;
            return eval(*n.rhs, f) != 0 ? 1 : 0;
        }
        if (n.op == BinaryOp::Or) {
            if (eval(*n.lhs, f) != 0) return 1;
            return eval(*n.rhs, f) != 0 ? 1 : 0;
        }
        Int a = eval(*n.lhs, f);
        Int b = eval(*n.rhs, f);
        switch (n.op) {
            case BinaryOp::Add: return wrap_add(a, b);
            case BinaryOp::Sub: return wrap_sub(a, b);
            case BinaryOp::Mul: return wrap_mul(a, b);
            case BinaryOp::Div:
                if (b == 0) fail(RuntimeErrorKind::DivisionByZero, span,
                                 std::to_string(a) + " / 0");
                if (a == kIntMin && b == -1) return kIntMin;
                return a / b;  // truncates toward zero
            case BinaryOp::Mod:
                if (b == 0) fail(RuntimeErrorKind::DivisionByZero, span,
                                 std::to_string(a) + " % 0");
                if (a == kIntMin && b == -1) return 0;
                return a % b;  // takes the dividend's sign
            case BinaryOp::Pow: {
                if (b < 0) {
                    fail(RuntimeErrorKind::NegativeExponent, span,
                         std::to_string(a) + " ** " + std::to_string(b));
                }
                Int result = 1;
                Int base = a;
                std::uint64_t exp = static_cast<std::uint64_t>(b);
                while (exp != 0) {
                    if (exp & 1) result = wrap_mul(result, base);
                    base = wrap_mul(base, base);
                    exp >>= 1;
                }
                return result;
            }
            case BinaryOp::BitAnd: return a & b;
            case BinaryOp::BitOr: return a | b;
            case BinaryOp::BitXor: return a ^ b;
            case BinaryOp::Eq: return a == b ? 1 : 0;
            case BinaryOp::Ne: return a != b ? 1 : 0;
            case BinaryOp::Lt: return a < b ? 1 : 0;
            case BinaryOp::Le: return a <= b ? 1 : 0;
            case BinaryOp::Gt: return a > b ? 1 : 0;
            case BinaryOp::Ge: return a >= b ? 1 : 0;
            default: return 0;  // And/Or handled above
        }
    }

    // Resolves a scalar-valued lvalue to its storage; counts an element read
    // for input arrays since updates and swaps read the old value.
    Int* resolve_cell(const LValue& lv, Cell** f, bool& input_array) {
        Cell* c = f[lv.slot];
        if (lv.index) {
            Int idx = eval(*lv.index, f);
            if (idx < 0 || static_cast<std::uint64_t>(idx) >= c->elems.size()) {
                fail(RuntimeErrorKind::IndexOutOfBounds, lv.span,
                     lv.name + "[" + std::to_string(idx) + "] is out of bounds (length " +
                         std::to_string(c->elems.size()) + ")");
            }
            input_array = c->role == CellRole::InputArray;
            return &c->elems[static_cast<std::size_t>(idx)];
        }
        input_array = false;
        return &c->value;
    }

    void exec(const Stmt& s, Cell** f) {
        charge(s.span);
        if (trace_) emit(TraceEvent{TraceEvent::Kind::Statement, s.span, {}, 0, 0, false});
        std::visit(
            [this, &s, f](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Stmt::Update>) {
                    exec_update(n, f);
                } else if constexpr (std::is_same_v<T, Stmt::Swap>) {
                    exec_swap(n, s.span, f);
                } else if constexpr (std::is_same_v<T, Stmt::If>) {
                    exec_if(n, s.span, f);
                } else if constexpr (std::is_same_v<T, Stmt::Loop>) {
                    exec_loop(n, s.span, f);
                } else if constexpr (std::is_same_v<T, Stmt::Local>) {
                    exec_local(n, s.span, f);
                } else if constexpr (std::is_same_v<T, Stmt::CallStmt>) {
                    exec_call(n, s.span, f);
                } else {
                    static_assert(std::is_same_v<T, Stmt::Skip>);
                }
            },
            s.node);
    }

    void exec_update(const Stmt::Update& n, Cell** f) {
        bool input_array = false;
        Int* cell = resolve_cell(n.target, f, input_array);
        Int rhs = eval(*n.rhs, f);
        Int old = *cell;
        switch (n.op) {
            case UpdateOp::Add: *cell = wrap_add(old, rhs); break;
            case UpdateOp::Sub: *cell = wrap_sub(old, rhs); break;
            case UpdateOp::Xor: *cell = old ^ rhs; break;
        }
        if (counters_ && input_array) {
            ++counters_->input_reads;
            ++counters_->input_writes;
        }
        if (trace_) {
            emit(TraceEvent{TraceEvent::Kind::Update, n.target.span, n.target.name, old,
                            *cell, false});
        }
    }

    void exec_swap(const Stmt::Swap& n, SourceSpan span, Cell** f) {
        bool lhs_input = false;
        bool rhs_input = false;
        Int* a = resolve_cell(n.lhs, f, lhs_input);
        Int* b = resolve_cell(n.rhs, f, rhs_input);
        Int va = *a;
        Int vb = *b;
        *a = vb;
        *b = va;
        if (counters_) {
            if (lhs_input) { ++counters_->input_reads; ++counters_->input_writes; }
            if (rhs_input) { ++counters_->input_reads; ++counters_->input_writes; }
        }
        if (trace_) {
            emit(TraceEvent{TraceEvent::Kind::Swap, span, n.lhs.name, va, vb, false});
            emit(TraceEvent{TraceEvent::Kind::Swap, span, n.rhs.name, vb, va, false});
        }
    }

    void exec_if(const Stmt::If& n, SourceSpan span, Cell** f) {
        Int test = eval(*n.test, f);
        bool then_taken = test != 0;
        exec_list(then_taken ? n.then_body : n.else_body, f);
        Int merge = eval(*n.merge, f);
        if (trace_) {
            emit(TraceEvent{TraceEvent::Kind::FiMerge, span, {}, test, merge, then_taken});
        }
        if ((merge != 0) != then_taken) {
            fail(RuntimeErrorKind::FiAssertionMismatch, span,
                 std::string("fi assertion is ") + (merge != 0 ? "true" : "false") +
                     " after the " + (then_taken ? "then" : "else") + " branch (value " +
                     std::to_string(merge) + ")");
        }
    }

    void exec_loop(const Stmt::Loop& n, SourceSpan span, Cell** f) {
        if (eval(*n.entry, f) == 0) {
            fail(RuntimeErrorKind::LoopEntryAssertion, span,
                 "loop entry assertion is false on arrival");
        }
        for (;;) {
            charge(span);
            if (trace_) emit(TraceEvent{TraceEvent::Kind::LoopIter, span, {}, 0, 0, false});
            if (eval(*n.exit, f) != 0) break;
            exec_list(n.body, f);
            if (eval(*n.entry, f) != 0) {
                fail(RuntimeErrorKind::LoopEntryAssertion, span,
                     "loop entry assertion became true again after an iteration");
            }
        }
    }

    void exec_local(const Stmt::Local& n, SourceSpan span, Cell** f) {
        Int init = eval(*n.init, f);
        Cell cell;
        cell.value = init;
        Cell* saved = f[n.slot];
        f[n.slot] = &cell;
        if (counters_) counters_->aux_alloc(1);
        if (trace_) {
            names_.emplace_back(n.var, &cell);
            emit(TraceEvent{TraceEvent::Kind::LocalAlloc, span, n.var, 0, init, false});
        }

        exec_list(n.body, f);

        Int fin = eval(*n.fin, f);
        if (trace_) {
            emit(TraceEvent{TraceEvent::Kind::LocalFree, span, n.var, cell.value, fin, false});
            names_.pop_back();
        }
        if (cell.value != fin) {
            fail(RuntimeErrorKind::DelocalMismatch, span,
                 "delocal of '" + n.var + "' expected " + std::to_string(fin) + ", cell holds " +
                     std::to_string(cell.value));
        }
        if (counters_) counters_->aux_free(1);
        f[n.slot] = saved;
    }

    void exec_call(const Stmt::CallStmt& n, SourceSpan span, Cell** f) {
        const Procedure& target = n.is_uncall
                                      ? inverses_.procedures[static_cast<std::size_t>(n.proc_index)]
                                      : prog_.procedures[static_cast<std::size_t>(n.proc_index)];
        if (++call_depth_ > kMaxCallDepth) {
            fail(RuntimeErrorKind::StepLimitExceeded, span, "call depth limit exceeded");
        }
        std::vector<Cell*> callee(static_cast<std::size_t>(target.frame_size), nullptr);
        for (std::size_t i = 0; i < n.arg_slots.size(); ++i) {
            callee[i] = f[n.arg_slots[i]];
        }
        for (std::size_t i = 0; i < n.arg_slots.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (callee[i] == callee[j]) {
                    fail(RuntimeErrorKind::CallAliasing, span,
                         "arguments '" + n.args[j] + "' and '" + n.args[i] +
                             "' alias the same cell");
                }
            }
        }
        std::size_t saved_start = frame_start_;
        std::size_t saved_size = names_.size();
        if (trace_) {
            emit(TraceEvent{TraceEvent::Kind::CallEnter, span, target.name, 0, 0, n.is_uncall});
            frame_start_ = names_.size();
            push_frame_names(target, callee.data());
        }

        exec_list(target.body, callee.data());

        if (trace_) {
            names_.resize(saved_size);
            frame_start_ = saved_start;
            emit(TraceEvent{TraceEvent::Kind::CallExit, span, target.name, 0, 0, n.is_uncall});
        }
        --call_depth_;
    }
};

void validate_manifest(const RoleManifest& manifest, const Procedure& proc) {
    for (const auto& name : manifest.inputs) {
        if (manifest.outputs.count(name)) {
            throw ManifestError("manifest lists '" + name + "' as both input and output");
        }
    }
    auto is_param = [&proc](const std::string& name) {
        for (const auto& p : proc.params) {
            if (p.name == name) return true;
        }
        return false;
    };
    for (const auto* set : {&manifest.inputs, &manifest.outputs}) {
        for (const auto& name : *set) {
            if (!is_param(name)) {
                throw ManifestError("manifest name '" + name + "' is not a parameter of '" +
                                    proc.name + "'");
            }
        }
    }
}

// Binds the entry frame to store cells and assigns metrics roles.
std::vector<Cell*> bind_frame(const Procedure& proc, Store& store,
                              const RoleManifest* manifest) {
    std::vector<Cell*> frame(static_cast<std::size_t>(proc.frame_size), nullptr);
    for (std::size_t i = 0; i < proc.params.size(); ++i) {
        const Param& p = proc.params[i];
        Cell* c = store.find(p.name);
        if (!c) {
            throw std::invalid_argument("entry parameter '" + p.name +
                                        "' is not bound in the store");
        }
        bool want_array = p.kind == ParamKind::Array;
        if (c->is_array != want_array) {
            throw std::invalid_argument("entry parameter '" + p.name + "' must be bound to " +
                                        (want_array ? "an array" : "a scalar"));
        }
        c->role = CellRole::Aux;
        if (manifest) {
            if (manifest->inputs.count(p.name)) {
                c->role = c->is_array ? CellRole::InputArray : CellRole::InputScalar;
            } else if (manifest->outputs.count(p.name)) {
                c->role = CellRole::Output;
            }
        }
        frame[i] = c;
    }
    return frame;
}

}  // namespace

Outcome run(const CheckedProgram& program, std::string_view entry, Store store, Direction dir,
            const RunOptions& opts) {
    const Procedure* proc = program.find(entry);
    if (!proc) {
        throw std::invalid_argument("unknown entry procedure '" + std::string(entry) + "'");
    }
    if (opts.manifest) validate_manifest(*opts.manifest, *proc);

    std::vector<Cell*> frame = bind_frame(*proc, store, opts.manifest);

    Counters counters;
    if (opts.manifest) {
        for (std::size_t i = 0; i < proc->params.size(); ++i) {
            const Cell* c = frame[i];
            if (c->role == CellRole::Aux) {
                counters.aux_alloc(c->is_array ? static_cast<std::int64_t>(c->elems.size()) : 1);
            }
        }
    }
    std::optional<Store> initial;
    if (opts.manifest) initial = store;

    const Procedure* body =
        dir == Direction::Forward ? proc : program.find_inverse(entry);
    Engine engine(program.program(), program.inverses(), opts.fuel,
                  opts.manifest ? &counters : nullptr, opts.trace ? &opts.trace : nullptr);
    engine.push_frame_names(*proc, frame.data());

    Outcome out;
    try {
        engine.exec_list(body->body, frame.data());
    } catch (const RuntimeErrorException& ex) {
        out.error = ex.error;
        return out;
    }

    MetricsRecord rec;
    rec.steps = engine.steps();
    rec.input_reads = counters.input_reads;
    rec.input_writes = counters.input_writes;
    rec.aux_highwater_cells = static_cast<std::uint64_t>(counters.aux_peak);
    if (opts.manifest) {
        GarbageAudit audit = audit_garbage(*initial, store, *opts.manifest);
        rec.garbage_cells = audit.garbage_cells;
        rec.input_restored = audit.input_restored;
    }
    out.metrics = rec;
    out.store = std::move(store);
    return out;
}

PreparedRun::PreparedRun(const CheckedProgram& program, std::string_view entry, Store& store,
                         Direction dir)
    : program_(program) {
    const Procedure* proc = program.find(entry);
    if (!proc) {
        throw std::invalid_argument("unknown entry procedure '" + std::string(entry) + "'");
    }
    body_ = dir == Direction::Forward ? proc : program.find_inverse(entry);
    frame_ = bind_frame(*proc, store, nullptr);
}

std::optional<RuntimeError> PreparedRun::execute(std::uint64_t fuel) {
    Engine engine(program_.program(), program_.inverses(), fuel, nullptr, nullptr);
    try {
        engine.exec_list(body_->body, frame_.data());
    } catch (const RuntimeErrorException& ex) {
        return ex.error;
    }
    return std::nullopt;
}

namespace {

Procedure store_shaped_procedure(const Store& store, std::string name) {
    Procedure proc;
    proc.name = std::move(name);
    for (const auto& entry : store.entries()) {
        proc.params.push_back(Param{
            entry.name, entry.cell->is_array ? ParamKind::Array : ParamKind::Scalar, {}});
    }
    return proc;
}

}  // namespace

EvalResult eval(const Expr& e, const Store& store) {
    Procedure proc = store_shaped_procedure(store, "__eval");
    proc.params.push_back(Param{"__result", ParamKind::Scalar, {}});
    proc.body.push_back(
        make_stmt(Stmt::Update{LValue{"__result", nullptr, e.span}, UpdateOp::Xor, clone(e)},
                  e.span));
    Program prog;
    prog.procedures.push_back(std::move(proc));

    CheckResult checked = check(std::move(prog));
    if (!checked.ok()) {
        throw std::invalid_argument("expression is not evaluable in this store: " +
                                    checked.errors.front().message);
    }
    Store work = store;
    work.set_scalar("__result", 0);
    Outcome out = run(*checked.program, "__eval", std::move(work));

    EvalResult result;
    if (!out.ok()) {
        result.error = out.error;
        return result;
    }
    result.value = out.store->find("__result")->value;
    return result;
}

std::optional<RuntimeError> exec(const Stmt& s, Store& store) {
    if (std::holds_alternative<Stmt::CallStmt>(s.node)) {
        throw std::invalid_argument("call/uncall statements need a program context; use run()");
    }
    Procedure proc = store_shaped_procedure(store, "__exec");
    proc.body.push_back(clone(s));
    Program prog;
    prog.procedures.push_back(std::move(proc));

    CheckResult checked = check(std::move(prog));
    if (!checked.ok()) {
        throw std::invalid_argument("statement is not executable in this store: " +
                                    checked.errors.front().message);
    }
    Outcome out = run(*checked.program, "__exec", store);
    if (!out.ok()) return out.error;
    store = std::move(*out.store);
    return std::nullopt;
}

}  // namespace rjns
