#include <iostream>
#include <string>
#include <vector>

#include "naimark/cli.hpp"

int main(int argc, char** argv) {
  return naimark::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
