#include <cstdio>
int main() { std::printf("lossykern: cli not wired yet\n"); return 1; }
