#include <iostream>

#include "secreg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return secreg::run_cli(args, std::cout, std::cerr);
}
