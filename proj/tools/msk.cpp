#include <iostream>

#include "msk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return msk::cli::run(args, std::cout, std::cerr);
}
