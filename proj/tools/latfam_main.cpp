#include <iostream>
#include <string>
#include <vector>

#include "latfam/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latfam::io::run(args, std::cout, std::cerr);
}
