#include <iostream>
#include <string>
#include <vector>

#include "cubics/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cubics::cli::run(args, std::cout, std::cerr);
}
