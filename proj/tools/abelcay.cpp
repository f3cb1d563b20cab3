#include <iostream>
#include <string>
#include <vector>

#include "abelcay/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return abelcay::cli::run(args, std::cout, std::cerr);
}
