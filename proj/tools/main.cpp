#include <iostream>
#include <string>
#include <vector>

#include "akh_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return akh::cli::main_entry(args, std::cout, std::cerr);
}
