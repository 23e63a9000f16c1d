#include <iostream>

#include "qgraft/cli.hpp"

int main(int argc, char** argv) { return qgraft::dispatch(argc, argv, std::cout, std::cerr); }
