// sfscat - strict factorization systems and finite monoids
//
// Command-line entry point; see sfscat/cli.hpp for the subcommands.

#include <iostream>
#include <string>
#include <vector>

#include "sfscat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = sfscat::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
