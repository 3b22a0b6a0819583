#include <iostream>

#include "bqalg/cli.hpp"

int main(int argc, char** argv) {
  return bqalg::run_cli(argc, argv, std::cout, std::cerr);
}
