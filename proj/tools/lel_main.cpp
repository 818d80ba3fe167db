#include <iostream>
#include <vector>

#include "lel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lel::cli::run(std::move(args), std::cout, std::cerr);
}
