#include "hexmg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hexmg::run_cli(argc, argv, std::cout, std::cerr); }
