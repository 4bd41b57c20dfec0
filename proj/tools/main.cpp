#include <iostream>
#include <string>
#include <vector>

#include <solbraid/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return solbraid::cli::run(std::move(args), std::cout, std::cerr);
}
