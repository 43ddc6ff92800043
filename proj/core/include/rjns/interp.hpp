// Bidirectional tree-walking evaluator.
//
// A run owns its Store exclusively; distinct runs share nothing and may
// execute in parallel over the same CheckedProgram. Backward execution
// interprets the precomputed inverse body, so one engine serves both
// directions.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rjns/check.hpp"
#include "rjns/metrics.hpp"
#include "rjns/store.hpp"

namespace rjns {

enum class Direction : std::uint8_t { Forward, Backward };

enum class RuntimeErrorKind : std::uint8_t {
    FiAssertionMismatch,
    LoopEntryAssertion,
    DelocalMismatch,
    IndexOutOfBounds,
    DivisionByZero,
    NegativeExponent,
    CallAliasing,       // argument aliasing that slipped past static checks
    StepLimitExceeded,  // fuel or call-depth cap hit
};

std::string_view runtime_error_kind_name(RuntimeErrorKind kind);

struct RuntimeError {
    RuntimeErrorKind kind;
    SourceSpan span;
    std::string message;
};

struct TraceEvent {
    enum class Kind : std::uint8_t {
        Statement,   // a statement is about to execute
        Update,      // before/after hold the old and new cell value
        Swap,        // one event per side
        FiMerge,     // before = test value, after = merge value
        LoopIter,    // top of a loop iteration, before the until test
        LocalAlloc,  // after = initial value
        LocalFree,   // before = value at delocal
        CallEnter,
        CallExit,
    };
    Kind kind;
    SourceSpan span;
    std::string_view name;  // update target / local var / callee, if any
    Int before = 0;
    Int after = 0;
    bool then_taken = false;  // FiMerge only
};

/// Read access to the scalars visible in the frame that emitted an event
/// (parameters and live locals; innermost shadowing binding wins).
class FrameInspector {
public:
    using NameStack = std::vector<std::pair<std::string_view, const Cell*>>;

    FrameInspector() = default;
    FrameInspector(const NameStack* names, std::size_t frame_start)
        : names_(names), frame_start_(frame_start) {}

    std::optional<Int> scalar(std::string_view name) const;

private:
    const NameStack* names_ = nullptr;
    std::size_t frame_start_ = 0;
};

using TraceFn = std::function<void(const TraceEvent&, const FrameInspector&)>;

struct RunOptions {
    std::uint64_t fuel = 100'000'000;  // statement budget; guards divergence
    const RoleManifest* manifest = nullptr;  // enables role-aware metrics
    TraceFn trace;                           // debug step log when set
};

struct Outcome {
    std::optional<Store> store;            // terminal store on success
    std::optional<MetricsRecord> metrics;  // on success
    std::optional<RuntimeError> error;

    bool ok() const { return !error.has_value(); }
};

/// Runs `entry` over `store`, which must bind every parameter by name with
/// the right kind (std::invalid_argument otherwise; ManifestError when the
/// manifest names unbound or overlapping parameters).
Outcome run(const CheckedProgram& program, std::string_view entry, Store store,
            Direction dir = Direction::Forward, const RunOptions& opts = {});

/// Rebindable execution handle: binds the frame to `store`'s cells once and
/// can re-execute after the caller mutates those cells in place. Used for
/// high-volume sweeps; collects no metrics.
class PreparedRun {
public:
    PreparedRun(const CheckedProgram& program, std::string_view entry, Store& store,
                Direction dir = Direction::Forward);

    /// Executes once, mutating the bound store. Returns the error, if any.
    std::optional<RuntimeError> execute(std::uint64_t fuel = 100'000'000);

private:
    const CheckedProgram& program_;
    const Procedure* body_;
    std::vector<Cell*> frame_;
};

struct EvalResult {
    std::optional<Int> value;
    std::optional<RuntimeError> error;

    bool ok() const { return value.has_value(); }
};

/// Evaluates an expression against a store (test/CLI convenience; the names
/// must be bound with matching kinds, else std::invalid_argument).
EvalResult eval(const Expr& e, const Store& store);

/// Executes a single statement against a store. call/uncall statements are
/// rejected (std::invalid_argument) since they need a surrounding program.
std::optional<RuntimeError> exec(const Stmt& s, Store& store);

}  // namespace rjns
