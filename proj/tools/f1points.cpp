#include <iostream>
#include <string>
#include <vector>

#include "f1/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return f1::cli_main(args, std::cout, std::cerr);
}
