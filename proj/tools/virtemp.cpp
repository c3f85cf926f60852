#include <iostream>

#include "virtemp/cli.hpp"

int main(int argc, char** argv) { return virtemp::cli::run(argc, argv, std::cout, std::cerr); }
