#include <iostream>

#include "e3lab/cli.hpp"

int main(int argc, char** argv) { return e3lab::cli::main(argc, argv, std::cout, std::cerr); }
