#include <iostream>
#include <string>
#include <vector>

#include "dkern/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return dkern::run_command(args, std::cin, std::cout, std::cerr, dkern::config_from_environment());
}
