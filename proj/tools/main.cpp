#include <iostream>

#include "teamlogic/cli.hpp"

int main(int argc, char** argv) { return teamlogic::cli::run(argc, argv, std::cout, std::cerr); }
