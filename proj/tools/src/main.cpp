#include <iostream>
#include <string>
#include <vector>

#include "slidetok/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return slidetok::run_cli(args, std::cout, std::cerr);
}
