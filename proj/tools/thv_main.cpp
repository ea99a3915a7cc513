#include <cstdio>
#include <string>
#include <vector>

#include "thv/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const thv::CommandResult res = thv::run_command(args);
  std::fputs(res.text.c_str(), stdout);
  return res.code;
}
