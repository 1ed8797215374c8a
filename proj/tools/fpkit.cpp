#include <iostream>
#include <string>
#include <vector>

#include "fpkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fpkit::cli::run(args, std::cout, std::cerr);
}
