#include <string>
#include <vector>

#include "holeforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return holeforge::cli::run(std::move(args));
}
