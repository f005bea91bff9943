// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include <iostream>
#include <string>
#include <vector>

#include "elcp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return elcp::run_cli(args, std::cout, std::cerr);
}
