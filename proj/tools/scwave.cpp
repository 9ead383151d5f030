// placeholder CLI; filled in after the numerics are validated
int main() { return 0; }
