#include <iostream>

#include "qframes/cli.hpp"

int main(int argc, char** argv) { return qframes::cli::run(argc, argv, std::cout, std::cerr); }
