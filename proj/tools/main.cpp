#include <iostream>
#include <string>
#include <vector>

#include "bench.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tra::bench::run(args, std::cout, std::cerr);
}
