#include <iostream>
#include <string>
#include <vector>

#include "tpdl/cli/app.hpp"

int main(int argc, char** argv) {
  return tpdl::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
