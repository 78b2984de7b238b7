#include <iostream>
#include <string>
#include <vector>

#include "betagap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return betagap::run(args, std::cout, std::cerr);
}
