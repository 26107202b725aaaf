#include <iostream>

#include "torspec/cli.hpp"

int main(int argc, char** argv) {
  return torspec::cli::run(argc, argv, std::cout, std::cerr);
}
