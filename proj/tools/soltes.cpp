#include <iostream>

#include "soltes/cli.hpp"

int main(int argc, char** argv) { return soltes::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
