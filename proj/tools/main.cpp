#include <iostream>

#include "skewbrace/cli.hpp"

int main(int argc, char** argv) { return skewbrace::cli::run(argc, argv, std::cout, std::cerr); }
