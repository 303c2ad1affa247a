#include <iostream>

#include "jus/cli.hpp"

int main(int argc, char** argv) { return jus::run_cli(argc, argv, std::cout, std::cerr); }
