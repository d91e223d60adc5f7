#include <iostream>

#include "diq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return diq::cli::run(args, std::cout, std::cerr);
}
