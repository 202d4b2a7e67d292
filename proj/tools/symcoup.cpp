#include <iostream>

#include "symcoupling/cli.hpp"

int main(int argc, char** argv) { return symcoupling::cli::run(argc, argv, std::cout, std::cerr); }
