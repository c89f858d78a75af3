#include <iostream>

#include "invharm/cli.hpp"

int main(int argc, char** argv) {
  return invharm::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
