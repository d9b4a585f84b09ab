// SPDX-License-Identifier: MIT
//
// jpsq command-line front end.

#include <cstdio>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "jpsq: not yet implemented\n");
  return 2;
}
