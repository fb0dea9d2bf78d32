#include <iostream>
#include <string>
#include <vector>

#include "lnd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lnd::cli::run(args, std::cin, std::cout, std::cerr);
}
