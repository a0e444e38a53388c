#include <iostream>

#include "denv/cli.hpp"

int main(int argc, char** argv) { return denv::run_cli(argc, argv, std::cout, std::cerr); }
