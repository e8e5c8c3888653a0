#include <iostream>

#include "twofold/cli.hpp"

int main(int argc, char** argv) { return twofold::cli::main(argc, argv, std::cout, std::cerr); }
