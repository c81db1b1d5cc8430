#include "cli.hpp"

int main(int argc, char** argv) { return pairjac::cli::run_cli(argc, argv); }
