#include <iostream>
#include <string>
#include <vector>

#include "banach_ortho/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return banach_ortho::run_cli(args, std::cout, std::cerr);
}
