#pragma once

#include <string>

#include "arq/algebra.hpp"

namespace arq::io {

// JSON algebra spec; syntax errors carry line and column
AlgebraSpec parse_spec(const std::string& text);
AlgebraSpec load_spec(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace arq::io
