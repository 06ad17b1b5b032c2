// placeholder while the CLI lands
int main() { return 0; }
