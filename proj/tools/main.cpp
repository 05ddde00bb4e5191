#include <iostream>
#include <string>
#include <vector>

#include "dnkit/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const dnkit::cli::RunResult result = dnkit::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
