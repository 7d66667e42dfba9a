// Writes one workspace document per seed corpus entry.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "trider/workspace.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: trider_make_corpus <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& entry : trider::standard::seed_corpus()) {
    const auto path = dir / (entry.name + ".json");
    std::ofstream(path) << trider::dump_workspace(trider::corpus_workspace(entry));
    std::cout << path.string() << "\n";
  }
}
