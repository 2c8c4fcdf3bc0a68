#include <iostream>
#include <string>
#include <vector>

#include "inselim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return inselim::run_cli(std::move(args), std::cout, std::cerr);
}
