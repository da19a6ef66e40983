// Writes the built-in examples as sset-v1 documents into a directory.

#include <fstream>
#include <iostream>

#include "sectcx/examples.hpp"
#include "sectcx/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_data <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  for (const auto& ex : {sectcx::examples::sphere(), sectcx::examples::sphere_subdivided(),
                         sectcx::examples::cylinder(), sectcx::examples::triangle(),
                         sectcx::examples::point_sphere()}) {
    std::ofstream out(dir + "/" + ex.name + ".json");
    out << sectcx::to_json(ex.space, ex.heights).dump(2) << "\n";
  }
  return 0;
}
