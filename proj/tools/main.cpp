#include <iostream>

#include "cleanring/cli.hpp"

int main(int argc, char** argv) { return cleanring::run_cli(argc, argv, std::cout, std::cerr); }
