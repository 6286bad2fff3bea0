#include <iostream>

#include "framedual/cli.hpp"

int main(int argc, char** argv) {
  return framedual::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
