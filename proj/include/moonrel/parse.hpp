#pragma once

#include <string_view>

#include "moonrel/ratfun.hpp"

namespace moonrel {

// Grammar: integer literals, the variable x, + - * / and ^ with a positive
// integer exponent, parentheses. Usual precedence; ^ binds tightest and is
// right-associative; unary minus binds looser than ^. Whitespace is ignored.
RatFun parse_ratfun(std::string_view text);

}  // namespace moonrel
