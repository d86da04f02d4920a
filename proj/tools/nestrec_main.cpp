#include <iostream>

#include "nestrec/cli.hpp"

int main(int argc, char** argv) {
  return nestrec::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
