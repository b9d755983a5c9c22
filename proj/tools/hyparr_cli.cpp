#include <iostream>
#include <string>
#include <vector>

#include "hyparr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyparr::run(args, std::cout, std::cerr);
}
