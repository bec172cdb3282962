#include <cstdio>

#include "fibalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto res = fibalg::cli::run(args);
  std::fputs(res.output.c_str(), stdout);
  return res.exit_code;
}
