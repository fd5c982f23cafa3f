#include <iostream>
#include <string>
#include <vector>

#include "nfrft/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nfrft::cli::run(args, std::cout, std::cerr);
}
