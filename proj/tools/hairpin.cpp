#include <iostream>
#include <string>
#include <vector>

#include "hairpin/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hairpin::cli::run(args, std::cout, std::cerr);
}
