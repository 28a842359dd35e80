#include "radial/cli.hpp"

int main(int argc, char** argv) { return radial::cli::run_cli(argc, argv); }
