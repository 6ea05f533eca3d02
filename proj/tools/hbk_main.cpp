#include <iostream>
#include <vector>

#include "hbk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hbk::run_cli(args, std::cout, std::cerr);
}
