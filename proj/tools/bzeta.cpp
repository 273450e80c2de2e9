#include <iostream>
#include <string>
#include <vector>

#include "bzeta/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return bzeta::cli::run(args, std::cout, std::cerr);
}
