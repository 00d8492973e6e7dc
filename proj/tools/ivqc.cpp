#include <iostream>

#include "ivq/cli.hpp"

int main(int argc, char** argv) { return ivq::run_cli(argc, argv, std::cout, std::cerr); }
