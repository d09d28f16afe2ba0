#include <iostream>

#include "artin/cli.hpp"

int main(int argc, char** argv) {
  return artin::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
