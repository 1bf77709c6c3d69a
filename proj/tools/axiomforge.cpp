#include <iostream>

#include "axiomforge/cli/cli.hpp"

int main(int argc, char** argv) { return axiomforge::cli::run_cli(argc, argv, std::cout, std::cerr); }
