#include <iostream>
#include <string>
#include <vector>

#include "qplane/cli.hpp"

int main(int argc, char** argv) {
  return qplane::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
