#include "anhosc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return anhosc::run_cli(argc, argv, std::cout, std::cerr); }
