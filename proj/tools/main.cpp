#include <iostream>

#include "lbext/cli.hpp"

int main(int argc, char** argv) {
  return lbext::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
