#include <iostream>
#include <vector>

#include "mbs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mbs::run_cli(args, std::cout, std::cerr);
}
