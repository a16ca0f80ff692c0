#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "locc/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> mem_cap;
  if (const char* env = std::getenv("LOCC_LAB_MEM_CAP")) mem_cap = env;
  return locc::cli::run(args, std::cout, std::cerr, mem_cap);
}
