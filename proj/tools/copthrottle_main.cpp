#include "ct/cli_run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ct::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
