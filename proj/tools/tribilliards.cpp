#include <unistd.h>

#include <iostream>

#include "tribilliards/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tribilliards::run(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
