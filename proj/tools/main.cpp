#include <string>
#include <vector>

#include "socent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return socent::run_cli(args);
}
