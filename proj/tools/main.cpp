#include <iostream>
#include <string>
#include <vector>

#include "treearr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return treearr::run_cli(args, std::cout, std::cerr);
}
