// Regenerates data/dynkin_diagrams.txt content on stdout.
#include <cstdio>
#include <cstring>

#include "chevlie/catalog.hpp"

using namespace chevlie;

int main(int argc, char** argv) {
  std::vector<std::string> types = {"G2", "F4", "E6", "E7", "E8"};
  if (argc > 1) {
    types.clear();
    for (int i = 1; i < argc; ++i) types.push_back(argv[i]);
  }
  std::printf("# Weighted Dynkin diagram tables (Bourbaki numbering).\n");
  std::printf("# Derived from the root systems: one entry per (Levi subsystem,\n");
  std::printf("# distinguished parabolic grading) pair, dominant-conjugated.\n");
  std::printf("# Regenerate with: chevlie-gen-tables > data/dynkin_diagrams.txt\n");
  for (const std::string& name : types) {
    SimpleType t = SimpleType::parse(name);
    auto table = generate_dynkin_table(t);
    std::printf("\n[table]\ntype = %s\ncount = %zu\n[/table]\n", name.c_str(), table.size());
    for (const auto& d : table) {
      std::string w;
      for (std::size_t i = 0; i < d.weights.size(); ++i) {
        if (i) w += ",";
        w += std::to_string(d.weights[i]);
      }
      std::printf("\n[diagram]\ntype = %s\nlabel = %s\nweights = %s\n[/diagram]\n",
                  name.c_str(), d.label.c_str(), w.c_str());
    }
  }
  return 0;
}
