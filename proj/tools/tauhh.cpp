#include <iostream>

#include "tauhh/cli.hpp"

int main(int argc, char** argv) { return tauhh::run_cli(argc, argv, std::cout, std::cerr); }
