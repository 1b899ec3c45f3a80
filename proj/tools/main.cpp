#include <iostream>
#include <vector>

#include "grouplab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grouplab::cli::run(std::move(args), std::cout, std::cerr);
}
