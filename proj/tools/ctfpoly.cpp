#include <iostream>

#include "ctf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ctf::cli::run(args, std::cout, std::cerr);
}
