#include <iostream>
#include <string>
#include <vector>

#include "symcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symcover::run_cli(args, std::cout, std::cerr);
}
