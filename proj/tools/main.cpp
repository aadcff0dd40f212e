#include "camspec/cli.hpp"

int main(int argc, char** argv) { return camspec::run_cli(argc, argv); }
