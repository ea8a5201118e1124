#include "infhom/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return infhom::run_cli(argc, argv, std::cout, std::cerr); }
