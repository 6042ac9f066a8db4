#include <iostream>

#include "oscdual/cli.hpp"

int main(int argc, char** argv) {
  return oscdual::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
