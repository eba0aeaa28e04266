#include <iostream>

#include "dimap/cli.hpp"

int main(int argc, char** argv) { return dimap::run(argc, argv, std::cout, std::cerr); }
