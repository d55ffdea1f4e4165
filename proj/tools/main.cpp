#include <iostream>

#include "diffca/cli.hpp"

int main(int argc, char** argv) {
  return diffca::run_cli(argc, argv, std::cout, std::cerr);
}
