#include <iostream>
#include <string>
#include <vector>

#include "qcurve_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return qcurve::cli::run(args, std::cout, std::cerr);
}
