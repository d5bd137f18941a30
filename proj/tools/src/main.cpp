#include "heightzeta_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return heightzeta::cli::dispatch(argc, argv, std::cout, std::cerr); }
