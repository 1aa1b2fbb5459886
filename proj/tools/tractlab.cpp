#include "tractlab/cli.hpp"

int main(int argc, char** argv) { return tractlab::cli_main(argc, argv); }
