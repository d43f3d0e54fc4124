#include <iostream>

#include "dieu/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dieu::cli::run(args, std::cin, std::cout, std::cerr);
}
