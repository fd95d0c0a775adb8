#include <iostream>
#include <vector>

#include "monopath/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return monopath::runCli(args, std::cout, std::cerr);
}
