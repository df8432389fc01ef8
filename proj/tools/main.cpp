#include <vector>

#include "dve/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dve::cli::dispatch(args);
}
