#include <iostream>

#include "jointspec/cli/commands.hpp"

int main(int argc, char** argv) { return jointspec::cli::run(argc, argv, std::cout, std::cerr); }
