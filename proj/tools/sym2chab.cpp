#include <iostream>
#include <string>
#include <vector>

#include "sym2chab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sym2chab::cli::dispatch(args, std::cout, std::cerr);
}
