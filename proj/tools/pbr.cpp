#include "cli.hpp"

#include <iostream>

// Exit codes: 0 ok, 2 parse error, 3 precondition, 4 precision exhausted, 1 anything else.
int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return pbr::cli::run_cli(args, std::cout, std::cerr);
}
