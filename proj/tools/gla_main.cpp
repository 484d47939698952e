// Placeholder entry point; the full command-line surface lands with the
// public API.
#include <iostream>

int main() {
  std::cerr << "gla: no command given\n";
  return 1;
}
