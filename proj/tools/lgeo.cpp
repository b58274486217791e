#include <iostream>

#include "lgeo/cli.hpp"

int main(int argc, char** argv) {
  return lgeo::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
