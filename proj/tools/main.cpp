#include <cstdio>

int main() {
  std::puts("twistcong cli: subcommands land after the core stabilizes");
  return 0;
}
