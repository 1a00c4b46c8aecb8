#include <iostream>

#include "dlchar/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return dlchar::cli::run(args, std::cout, std::cerr);
}
