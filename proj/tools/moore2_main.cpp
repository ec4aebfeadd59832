#include <iostream>

#include <moore2/cli.hpp>

int main(int argc, char** argv) {
  return moore2::cli::run(argc, argv, std::cout, std::cerr);
}
