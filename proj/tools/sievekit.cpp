#include <cstdio>
int main() { std::puts("sievekit: not built yet"); return 2; }
