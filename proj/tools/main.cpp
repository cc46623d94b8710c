#include <iostream>

#include "htg/cli.hpp"

int main(int argc, char** argv) {
  return htg::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
