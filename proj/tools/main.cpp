#include <iostream>

#include "dcl/cli.hpp"

int main(int argc, char** argv) {
  return dcl::cli::run(argc, argv, std::cout, std::cerr);
}
