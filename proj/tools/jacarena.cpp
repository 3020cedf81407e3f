#include <iostream>

#include "jacarena/cli.hpp"

int main(int argc, char** argv) { return jacarena::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
