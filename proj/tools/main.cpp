#include <iostream>
#include <string>
#include <vector>

#include "cayley/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cayley::cli::run(args, std::cout, std::cerr);
}
