#include <iostream>

#include "maxsg/cli.hpp"

int main(int argc, char** argv) { return maxsg::run_cli(argc, argv, std::cout); }
