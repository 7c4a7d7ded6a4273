#include <string>
#include <vector>

#include "wellspring/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wellspring::cli::run(args);
}
