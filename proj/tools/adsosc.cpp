#include <iostream>
#include <string>
#include <vector>

#include "adsosc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return adsosc::cli::run(args, std::cout, std::cerr);
}
