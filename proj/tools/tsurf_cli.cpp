#include <cstdio>

int main() {
  std::puts("tsurf cli placeholder");
  return 0;
}
