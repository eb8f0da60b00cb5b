#include <iostream>

#include "sqs_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sqs::cli::dispatch(args, std::cout, std::cerr);
}
