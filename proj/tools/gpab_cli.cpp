#include <iostream>

#include "gpab/cli.hpp"

int main(int argc, char** argv) {
  return gpab::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
