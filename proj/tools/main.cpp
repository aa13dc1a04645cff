#include <cstdio>

int main() {
  std::fprintf(stderr, "chevlie: not wired up yet\n");
  return 2;
}
