#include <iostream>
#include <string>
#include <vector>

#include "polyskel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyskel::cli::run(args, std::cout, std::cerr);
}
