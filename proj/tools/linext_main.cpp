#include <iostream>

#include "linext/cli.hpp"

int main(int argc, char** argv) { return linext::run_command_line(argc, argv, std::cout, std::cerr); }
