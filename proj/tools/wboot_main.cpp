#include <string>
#include <vector>

#include "wboot/cli.hpp"

int main(int argc, char** argv) {
  return wboot::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
