#include <iostream>

#include "automorphe/cli.hpp"

int main(int argc, char** argv) {
  return automorphe::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
