#include <iostream>
#include <string>
#include <vector>

#include "qbarrier_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qbarrier::cli::run(args, std::cout, std::cerr);
}
