#pragma once

#include <string>

#include "metab/lie.hpp"

namespace metab {

// Grammar: elem := ['-'] term (('+'|'-') term)*
//          term := rational '*' atom | atom | '0'
//          atom := 'y'INT | '[' elem (',' elem)+ ']'   (left-normed)
LieElement parse_lie(const std::string &src, const AlgebraConfig &cfg);

} // namespace metab
