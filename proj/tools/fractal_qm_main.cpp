#include <iostream>
#include <string>
#include <vector>

#include "fractal_qm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fractal_qm::cli::run(args, std::cout, std::cerr);
}
