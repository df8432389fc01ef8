#pragma once

#include <string>
#include <vector>

namespace dve::cli {

// Exit codes: 0 pass, 1 check failure, 2 usage/validation error.
int dispatch(const std::vector<std::string>& args);

}  // namespace dve::cli
