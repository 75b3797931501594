#include <iostream>

#include "omegat/cli.hpp"

int main(int argc, char** argv) {
  return omegat::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
