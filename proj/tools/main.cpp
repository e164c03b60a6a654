#include <iostream>

#include "reglab/cli.hpp"

int main(int argc, char** argv) { return reglab::cli::run_cli(argc, argv, std::cout, std::cerr); }
