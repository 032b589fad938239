#include "f5lab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return f5lab::cli::run(argc, argv, std::cout, std::cerr); }
