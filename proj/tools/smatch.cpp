#include <iostream>

#include "smatch/cli.hpp"

int main(int argc, char** argv) { return smatch::run_cli(argc, argv, std::cout, std::cerr); }
