#include <iostream>
#include <string>
#include <vector>

#include "torlog/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return torlog::cli::main(args, std::cin, std::cout, std::cerr);
}
