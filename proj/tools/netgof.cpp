#include <iostream>
#include <string>
#include <vector>

#include "netgof/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return netgof::run_cli(args, std::cout, std::cerr);
}
