#include <iostream>
#include <string>
#include <vector>

#include "antipow/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return antipow::cli::run(args, std::cout, std::cerr);
}
