#pragma once

#include "traced/dsl/ast.hpp"

#include <string_view>

namespace traced::dsl {

// prog := header decl* cmd*
// term := term ";" term | term "*" term | atom    ("*" binds tighter)
Program parse(std::string_view text);

}  // namespace traced::dsl
