#pragma once

#include <string>
#include <vector>

namespace astf::cli {

// Entry point shared by the astf executable and the tests.
// args excludes the program name. Exit codes: 0 success, 1 usage or
// configuration error, 2 data error.
int run(const std::vector<std::string>& args);

}  // namespace astf::cli
