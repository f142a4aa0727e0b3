#include <cstdio>
int main() { std::puts("rmtcheck: subcommands pending"); return 2; }
