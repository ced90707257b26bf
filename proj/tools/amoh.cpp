#include <iostream>
#include <string>
#include <vector>

#include "amoh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return amoh::cli::run(args, std::cin, std::cout, std::cerr);
}
