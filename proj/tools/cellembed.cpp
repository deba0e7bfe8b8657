#include <iostream>
#include <string>
#include <vector>

#include "cellembed/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cellembed::cli::run(args, std::cout, std::cerr);
}
