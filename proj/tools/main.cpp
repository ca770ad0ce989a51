#include <iostream>
#include <string>
#include <vector>

#include "omega6/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return omega6::cli::run(args, std::cout, std::cerr);
}
