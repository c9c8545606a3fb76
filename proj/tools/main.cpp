#include <iostream>
#include <string>
#include <vector>

#include "polysuffix/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polysuffix::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
