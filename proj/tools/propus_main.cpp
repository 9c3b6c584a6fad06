#include <iostream>
#include <string>
#include <vector>

#include "propus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return propus::cli::run(args, std::cout, std::cerr);
}
