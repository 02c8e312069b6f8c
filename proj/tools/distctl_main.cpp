#include "distctl/cli.hpp"

int main(int argc, char** argv) { return distctl::run_cli(argc, argv); }
