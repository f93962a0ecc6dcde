#include <iostream>
#include <string>
#include <vector>

#include "sscnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sscnet::run_command(args, std::cout, std::cerr);
}
