#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rigidepth::cli::run(argc, argv, std::cout, std::cerr); }
