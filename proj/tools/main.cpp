#include "frobkit/cli.hpp"

int main(int argc, char** argv) { return frobkit::cli_main(argc, argv); }
