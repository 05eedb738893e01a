#include <iostream>

#include "etaphi/cli.hpp"

int main(int argc, char** argv) { return etaphi::cli::main(argc, argv, std::cout, std::cerr); }
