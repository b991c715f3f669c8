#include "specnum/cli.hpp"

int main(int argc, char** argv) { return specnum::run_cli(argc, argv); }
