#include <iostream>

#include "degp/cli/cli.hpp"

int main(int argc, char** argv) { return degp::cli::run(argc, argv, {std::cout, std::cerr}); }
