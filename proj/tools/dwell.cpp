#include "dwell/cli.hpp"

int main(int argc, char** argv) { return dwell::cli::run(argc, argv); }
