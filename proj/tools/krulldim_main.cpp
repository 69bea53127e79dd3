#include <iostream>

#include "krulldim/cli.hpp"

int main(int argc, char** argv) { return krulldim::run_cli(argc, argv, std::cout, std::cerr); }
