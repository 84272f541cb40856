#include <iostream>

#include "hypo/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return hypo::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
