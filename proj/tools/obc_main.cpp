#include <iostream>

#include "obc/cli.hpp"

int main(int argc, char** argv) { return obc::cli::run(argc, argv, std::cout); }
