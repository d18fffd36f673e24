// Regenerates the canonical fixture corpus under a target directory.

#include <fstream>
#include <iostream>

#include "obstrukt/io.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  for (const auto& [name, content] : obk::canonical_fixtures()) {
    std::ofstream out(dir + "/" + name, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << dir << "/" << name << '\n';
      return 1;
    }
    out << content;
    std::cout << dir << "/" << name << '\n';
  }
  return 0;
}
