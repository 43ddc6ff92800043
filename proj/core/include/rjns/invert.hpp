// Structural program inversion.
//
// The inverse of a statement list is the reversed list of inverted
// statements:
//
//   inv(x += e)                      = x -= e
//   inv(x -= e)                      = x += e
//   inv(x ^= e)                      = x ^= e
//   inv(a <=> b)                     = a <=> b
//   inv(if t then s1 else s2 fi a)   = if a then inv(s1) else inv(s2) fi t
//   inv(from a loop s until u)       = from u loop inv(s) until a
//   inv(local v=e1 .. delocal v=e2)  = local v=e2 .. inv(..) .. delocal v=e1
//   inv(call p)                      = uncall p
//   inv(uncall p)                    = call p
//   inv(skip)                        = skip
//
// Inversion is an involution and preserves checkedness. Expression subtrees
// are shared with the input, not cloned; resolution annotations carry over
// because the inverse has the same parameters and local nesting.
#pragma once

#include "rjns/ast.hpp"

namespace rjns {

StmtPtr invert_stmt(const Stmt& s);
StmtList invert_stmts(const StmtList& body);

/// Same name and signature, inverted body.
Procedure invert_procedure(const Procedure& p);

/// Inverts every procedure, keeping order and names.
Program invert_program(const Program& p);

}  // namespace rjns
