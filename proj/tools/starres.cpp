#include <iostream>

#include "starres/cli.hpp"

int main(int argc, char** argv) { return starres::main_entry(argc, argv, std::cout, std::cerr); }
