#include <iostream>
#include <string>
#include <vector>

#include "rsyt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rsyt::run(args, std::cout, std::cerr);
}
