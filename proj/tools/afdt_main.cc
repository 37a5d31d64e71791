#include <iostream>

#include "afdt/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return afdt::cli::run(args, std::cout, std::cerr);
}
