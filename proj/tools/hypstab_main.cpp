#include <iostream>

#include "hypstab/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hypstab::run_cli(args, std::cout, std::cerr);
}
