#include <iostream>
#include <string>
#include <vector>

#include "qba/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return qba::run_cli(args, std::cin, std::cout, std::cerr);
}
