#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) { return cubegauss::cli::run(argc, argv, std::cout, std::cerr); }
