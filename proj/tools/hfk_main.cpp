#include "hfk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hfk::cli::run(argc, argv, std::cout, std::cerr); }
