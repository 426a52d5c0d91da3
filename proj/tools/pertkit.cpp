#include <iostream>
#include <string>
#include <vector>

#include "pert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pert::cli::run(args, std::cout, std::cerr);
}
