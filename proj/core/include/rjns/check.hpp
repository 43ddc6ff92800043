// Static reversibility checker.
//
// A program checks when:
//  - every name resolves and is used according to its kind (scalar vs array),
//  - updates and swaps obey the reversible-update restriction: the updated
//    cell's variable does not occur in the right-hand side or in any index
//    expression of the statement (conservatively by name),
//  - a local's own variable occurs in neither its init nor its final
//    expression,
//  - call and uncall sites resolve with matching arity and kinds, and no
//    call site binds the same cell to two parameters,
//  - parameter names within one procedure are distinct.
//
// Checking also resolves every name to a frame slot and precomputes the
// inverse of every procedure, so uncall never re-derives anything at runtime.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rjns/ast.hpp"

namespace rjns {

enum class CheckErrorKind {
    UpdateAlias,
    UnknownName,
    ArityMismatch,
    KindMismatch,
    ArgumentAliasing,
    DuplicateParameter,
    LocalSelfReference,
};

std::string_view check_error_kind_name(CheckErrorKind kind);

struct CheckError {
    CheckErrorKind kind;
    SourceSpan span;
    std::string message;
};

/// A checked, slot-resolved program together with the precomputed inverse of
/// every procedure. Immutable; share freely.
class CheckedProgram {
public:
    const Program& program() const { return *program_; }
    const Program& inverses() const { return *inverses_; }

    const Procedure* find(std::string_view name) const { return program_->find(name); }
    const Procedure* find_inverse(std::string_view name) const { return inverses_->find(name); }

    /// Index of a procedure in program().procedures, or -1.
    int index_of(std::string_view name) const;

private:
    friend struct CheckerAccess;
    std::shared_ptr<const Program> program_;
    std::shared_ptr<const Program> inverses_;
};

struct CheckResult {
    std::optional<CheckedProgram> program;  // set iff errors is empty
    std::vector<CheckError> errors;

    bool ok() const { return errors.empty(); }
};

CheckResult check(Program program);

}  // namespace rjns
