#include <iostream>
#include <vector>

#include "lagsub/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lagsub::cli::run(args, std::cout, std::cerr);
}
