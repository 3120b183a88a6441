#include <iostream>
#include <string>
#include <vector>

#include "torusfan/cli.hpp"

int main(int argc, char** argv) {
  return torusfan::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
