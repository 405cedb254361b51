#include <iostream>
#include <string>
#include <vector>

#include "sumeval_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sumeval::cli::run_cli(args, std::cout, std::cerr);
}
