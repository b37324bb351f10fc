#include "cli.hpp"

int main(int argc, char** argv) { return rotsurf::cli::run(argc, argv); }
