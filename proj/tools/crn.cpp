#include <iostream>
#include <string>
#include <vector>

#include "crn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return crn::run_cli(args, std::cout, std::cerr);
}
