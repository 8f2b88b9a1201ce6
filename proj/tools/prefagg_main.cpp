#include <iostream>

#include "prefagg/commands.hpp"

int main(int argc, char** argv) { return prefagg::run_cli(argc, argv, std::cout, std::cerr); }
