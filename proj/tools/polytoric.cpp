#include <iostream>
#include <string>
#include <vector>

#include "polytoric/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polytoric::cli::main(args, std::cout, std::cerr);
}
