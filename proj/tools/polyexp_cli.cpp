#include <iostream>

#include "polyexp/cli.hpp"

int main(int argc, char** argv) { return polyexp::cli::run(argc, argv, std::cout, std::cerr); }
