#include <iostream>

#include "icx/cli.hpp"

int main(int argc, char** argv) {
    return icx::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
