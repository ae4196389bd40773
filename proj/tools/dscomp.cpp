#include <iostream>
#include <string>
#include <vector>

#include "dsc/cli.hpp"

int main(int argc, char** argv) {
  return dsc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
