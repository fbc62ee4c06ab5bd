#include <iostream>

#include "mldeg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mldeg::cli::run_cli(args, std::cout, std::cerr);
}
