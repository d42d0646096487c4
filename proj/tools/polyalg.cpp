#include "polyalg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polyalg::cli::run(argc, argv, std::cout, std::cerr); }
