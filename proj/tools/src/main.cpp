#include <iostream>

#include "pcid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pcid::cli::run(args, std::cout, std::cerr, std::cin);
}
