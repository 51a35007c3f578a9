#include <iostream>

#include "cspath/cli.h"

int main(int argc, char** argv) { return cspath::RunCli(argc, argv, std::cout, std::cerr); }
