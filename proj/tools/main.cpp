#include <iostream>
#include <string>
#include <vector>

#include "icode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return icode::cli::run(args, std::cout, std::cerr);
}
