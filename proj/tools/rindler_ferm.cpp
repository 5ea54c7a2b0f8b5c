#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) { return rindler_ferm::cli::run(argc, argv, std::cout, std::cerr); }
