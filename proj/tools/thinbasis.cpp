// thinbasis: command-line front end. See include/thinbasis/cli.hpp.

#include "thinbasis/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return thinbasis::cli::run(argc, argv, std::cout, std::cerr); }
