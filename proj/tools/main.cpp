#include "bidepo/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bidepo::run_cli(argc, argv, std::cout, std::cerr); }
