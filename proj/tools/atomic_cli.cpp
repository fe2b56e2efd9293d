#include "atomic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return atomic::cli::run(argc, argv, std::cout, std::cerr); }
