#include <iostream>

#include "hesstop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hesstop::cli::run(args, std::cout, std::cerr);
}
