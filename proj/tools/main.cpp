#include "leibrack/cli.hpp"

int main(int argc, char** argv) { return leibrack::run_cli(argc, argv); }
