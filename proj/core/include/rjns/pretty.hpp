// Canonical pretty-printer. parse(pretty(p)) is structurally equal to p.
#pragma once

#include <string>

#include "rjns/ast.hpp"

namespace rjns {

std::string pretty(const Expr& e);
std::string pretty(const Procedure& p);
std::string pretty(const Program& p);

}  // namespace rjns
