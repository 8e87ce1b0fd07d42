#include <iostream>
#include <string>
#include <vector>

#include "jrbac/cli/driver.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jrbac::cli::run(args, std::cout, std::cerr);
}
