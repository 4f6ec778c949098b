#include <iostream>

#include "ldlab/cli.hpp"

int main(int argc, char** argv) {
    return ldlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
