// Abstract syntax of the reversible language subset.
//
// All AST nodes are immutable after construction and freely shareable
// between threads. Expression and statement nodes are held through
// shared_ptr<const T>; the inverter reuses subtrees instead of cloning.
//
// The `slot` fields are resolution annotations written exactly once by the
// checker (before a CheckedProgram is ever shared) and read-only afterwards;
// they map names to frame indices so the interpreter never does string
// lookups. Structural equality and pretty-printing ignore them.
#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rjns {

using Int = std::int64_t;

struct SourceSpan {
    std::uint32_t offset = 0;
    std::uint32_t length = 0;
    std::uint32_t line = 0;    // 1-based; 0 means "no location"
    std::uint32_t column = 0;  // 1-based
};

enum class BinaryOp : std::uint8_t {
    Add, Sub, Mul, Div, Mod, Pow,
    BitAnd, BitOr, BitXor,
    Eq, Ne, Lt, Le, Gt, Ge,
    And, Or,  // short-circuit
};

std::string_view binary_op_token(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    struct IntLit {
        Int value = 0;
    };
    struct Var {
        std::string name;
        mutable std::int32_t slot = -1;
    };
    struct Index {
        std::string array;
        ExprPtr index;
        mutable std::int32_t slot = -1;
    };
    struct SizeOf {
        std::string array;
        mutable std::int32_t slot = -1;
    };
    struct Neg {
        ExprPtr operand;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };

    using Node = std::variant<IntLit, Var, Index, SizeOf, Neg, Binary>;

    Node node;
    SourceSpan span;
};

ExprPtr make_int(Int value, SourceSpan span = {});
ExprPtr make_var(std::string name, SourceSpan span = {});
ExprPtr make_index(std::string array, ExprPtr index, SourceSpan span = {});
ExprPtr make_size_of(std::string array, SourceSpan span = {});
ExprPtr make_neg(ExprPtr operand, SourceSpan span = {});
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourceSpan span = {});

/// Scalar-valued storage designator: a scalar variable or one array cell.
struct LValue {
    std::string name;
    ExprPtr index;  // null for scalar variables
    SourceSpan span;
    mutable std::int32_t slot = -1;
};

enum class UpdateOp : std::uint8_t { Add, Sub, Xor };

std::string_view update_op_token(UpdateOp op);

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;
using StmtList = std::vector<StmtPtr>;

struct Stmt {
    struct Update {
        LValue target;
        UpdateOp op;
        ExprPtr rhs;
    };
    struct Swap {
        LValue lhs;
        LValue rhs;
    };
    // if test then .. else .. fi merge; the merge assertion must evaluate
    // true exactly when the then branch ran.
    struct If {
        ExprPtr test;
        StmtList then_body;
        StmtList else_body;  // may be empty
        ExprPtr merge;
    };
    // from entry loop .. until exit; entry holds exactly on arrival and the
    // exit condition is tested before each body execution.
    struct Loop {
        ExprPtr entry;
        StmtList body;
        ExprPtr exit;
    };
    // local int var = init .. delocal int var = fin
    struct Local {
        std::string var;
        ExprPtr init;
        StmtList body;
        ExprPtr fin;
        mutable std::int32_t slot = -1;
    };
    struct CallStmt {
        std::string proc;
        std::vector<std::string> args;  // argument names, by reference
        bool is_uncall = false;
        mutable std::vector<std::int32_t> arg_slots;
        mutable std::int32_t proc_index = -1;
    };
    struct Skip {};

    using Node = std::variant<Update, Swap, If, Loop, Local, CallStmt, Skip>;

    Node node;
    SourceSpan span;
};

StmtPtr make_stmt(Stmt::Node node, SourceSpan span = {});

enum class ParamKind : std::uint8_t { Scalar, Array };

struct Param {
    std::string name;
    ParamKind kind = ParamKind::Scalar;
    SourceSpan span;
};

struct Procedure {
    std::string name;
    std::vector<Param> params;
    StmtList body;
    SourceSpan span;
    // Frame layout computed by the checker: params occupy slots
    // [0, params.size()), locals reuse slots by nesting depth above that.
    mutable std::int32_t frame_size = -1;
};

struct Program {
    std::vector<Procedure> procedures;

    const Procedure* find(std::string_view name) const;
    bool empty() const { return procedures.empty(); }
};

/// Structural equality, ignoring spans and resolution annotations.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const LValue& a, const LValue& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const StmtList& a, const StmtList& b);
bool structurally_equal(const Procedure& a, const Procedure& b);
bool structurally_equal(const Program& a, const Program& b);

/// Set of variable and array names occurring in an expression.
std::set<std::string> free_names(const Expr& e);
void collect_free_names(const Expr& e, std::set<std::string>& out);

/// Deep copies with fresh (unresolved) annotation state.
ExprPtr clone(const Expr& e);
StmtPtr clone(const Stmt& s);
StmtList clone(const StmtList& body);
Procedure clone(const Procedure& p);
Program clone(const Program& p);

}  // namespace rjns
