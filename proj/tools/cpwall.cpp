#include <iostream>

#include "cpwall/cli.hpp"

int main(int argc, char** argv) { return cpwall::cli::run_cli(argc, argv, std::cout, std::cerr); }
