#include <iostream>

#include "ajcable/cli.hpp"

int main(int argc, char** argv) { return ajcable::cli::run(argc, argv, std::cout, std::cerr); }
