//===- firwine.cpp - Width inference command-line tool -------------------===//

#include "Driver.h"

#include <iostream>

int main(int argc, char **argv) {
  return firwine::runCli(argc, argv, std::cout, std::cerr);
}
