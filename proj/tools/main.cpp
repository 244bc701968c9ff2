#include <iostream>

#include "gtkey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gtkey::run_cli(args, std::cout, std::cerr);
}
