#include "eddy/cli.hpp"

int main(int argc, char** argv) { return eddy::cli::run(argc, argv); }
