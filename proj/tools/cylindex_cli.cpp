#include <iostream>

#include "cylindex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cylindex::run_cli(args, std::cout, std::cerr);
}
