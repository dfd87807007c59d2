#include "loghankel/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return loghankel::run(argc, argv, std::cout, std::cerr); }
