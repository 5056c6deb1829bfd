#include <iostream>
#include <vector>

#include "quasiq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return quasiq::cli_dispatch(args, std::cout, std::cerr);
}
