#include "fhmap/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fhmap::cli::run(argc, argv, std::cout, std::cerr); }
