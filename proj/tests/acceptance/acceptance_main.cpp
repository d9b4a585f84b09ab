// SPDX-License-Identifier: MIT
//
// End-to-end acceptance checks.  Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <cstdio>

int main() {
  std::printf("acceptance: no criteria implemented yet\n");
  return 1;
}
