#include "hermite_kit_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hermite_kit::cli::run(args, std::cout, std::cerr);
}
