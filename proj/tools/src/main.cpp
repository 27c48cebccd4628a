#include <iostream>

#include "pclosed_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pclosed::cli::run(args, std::cout, std::cerr);
}
