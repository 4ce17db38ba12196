#include <iostream>
#include <string>
#include <vector>

#include "realpoincare/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return realpoincare::run_cli(args, std::cout, std::cerr);
}
