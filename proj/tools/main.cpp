#include "polynt/cli.hpp"

int main(int argc, char** argv) { return polynt::cli::run(argc, argv); }
