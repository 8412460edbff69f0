#include <iostream>

#include <asmkit/cli.hpp>

int main(int argc, char** argv) { return asmkit::cli::main_entry(argc, argv, std::cout, std::cerr); }
