// Command-line front end (placeholder while the analysis modules land).
#include <cstdio>

int main() {
  std::fprintf(stderr, "recipdim: no subcommands wired up yet\n");
  return 2;
}
