#pragma once

#include <iostream>

namespace parkfact {

/// Entry point of the parkfact command-line tool. Returns 0 on success, 1 on
/// invalid input, 2 when a verification suite fails.
int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
            std::istream& in = std::cin);

}  // namespace parkfact
