#include <iostream>
#include <string>
#include <vector>

#include "gradenorm/cli.hpp"

int main(int argc, char** argv) {
  return gradenorm::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
