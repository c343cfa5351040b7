#include "hkd/cli.hpp"

int main(int argc, char** argv) { return hkd::run_cli(argc, argv); }
