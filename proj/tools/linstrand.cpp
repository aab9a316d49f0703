#include <iostream>

#include "linstrand/cli.hpp"

int main(int argc, char** argv) { return linstrand::cli::run(argc, argv, std::cout, std::cerr); }
