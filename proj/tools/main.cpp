#include <iostream>
#include <string>
#include <vector>

#include "sigdef/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return sigdef::cli::run(args, std::cout, std::cerr);
}
