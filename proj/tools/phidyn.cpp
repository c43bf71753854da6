#include "phidyn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return phidyn::run_cli(argc, argv, std::cout, std::cerr); }
