#include <iostream>
#include <string>
#include <vector>

#include "design_forge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return design_forge::run_cli(args, std::cout, std::cerr);
}
