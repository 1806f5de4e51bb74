#include <iostream>

#include "pedoe/cli/cli.hpp"

int main(int argc, char** argv) { return pedoe::cli::run(argc, argv, std::cout, std::cerr); }
