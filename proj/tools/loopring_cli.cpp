#include <iostream>

#include "loopring/cli.hpp"

int main(int argc, char** argv) { return loopring::cli::main_entry(argc, argv, std::cout, std::cerr); }
