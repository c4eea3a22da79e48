// thetadim — CLI for exact metric-dimension computations on generalized
// theta graphs. See `thetadim --help`.
#include <iostream>
#include <string>
#include <vector>

#include "thetadim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return thetadim::cli::run_cli(std::move(args), std::cout, std::cerr);
}
