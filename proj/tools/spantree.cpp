#include <iostream>

#include "spantree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spantree::cli::run(args, std::cout, std::cerr);
}
