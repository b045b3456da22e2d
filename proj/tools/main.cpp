#include <iostream>

#include "odetype/cli.hpp"

int main(int argc, char** argv) {
  return odetype::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
