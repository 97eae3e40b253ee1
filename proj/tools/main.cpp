#include <iostream>

#include "subfactor/cli.hpp"

int main(int argc, char** argv)
{
  return subfactor::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
