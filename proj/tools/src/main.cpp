#include <iostream>

#include "critmech_cli/cli.hpp"

int main(int argc, char** argv) { return critmech::cli::run(argc, argv, std::cout, std::cerr); }
