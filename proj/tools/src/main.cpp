#include <iostream>

#include "pawns_cli/app.hpp"

int main(int argc, char** argv) {
  return pawns::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
