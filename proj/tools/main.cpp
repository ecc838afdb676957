#include <iostream>

#include "linposet/cli.hpp"

int main(int argc, char** argv) { return linposet::run_cli(argc, argv, std::cout, std::cerr); }
