#include <iostream>

#include "coloop/cli/cli.hpp"

int main(int argc, char** argv) { return coloop::cli::run(argc, argv, std::cout, std::cerr); }
