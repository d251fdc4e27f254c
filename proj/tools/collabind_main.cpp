#include <iostream>
#include <string>
#include <vector>

#include "collabind/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return collabind::cli::run(args, std::cout, std::cerr);
}
