#include <iostream>

#include "xw/cli.hpp"

int main(int argc, char** argv) {
  return xw::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
