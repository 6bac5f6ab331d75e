#include <unistd.h>

#include <iostream>

#include "j3/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return j3::cli::run_cli(args, std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
}
