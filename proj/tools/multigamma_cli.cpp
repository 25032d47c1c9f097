#include "multigamma/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return multigamma::cli::run(argc, argv, std::cout, std::cerr); }
