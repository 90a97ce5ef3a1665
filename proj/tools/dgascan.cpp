#include "dgascan/cli.hpp"

int main(int argc, char** argv) { return dgascan::cli_main(argc, argv); }
