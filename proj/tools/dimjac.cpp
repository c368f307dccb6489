#include <iostream>
#include <string>
#include <vector>

#include "dimjac/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dimjac::cli::run(args, std::cout, std::cerr);
}
