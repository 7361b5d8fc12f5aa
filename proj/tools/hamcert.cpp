#include <iostream>

#include "hamcert/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hamcert::cli::run(args, std::cin, std::cout, std::cerr);
}
