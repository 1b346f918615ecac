#include <iostream>

#include "logseg/cli.hpp"

int main(int argc, char** argv) { return logseg::cli::main(argc, argv, std::cout, std::cerr); }
