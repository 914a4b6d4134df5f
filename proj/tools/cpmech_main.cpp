#include "cpmech/cli.hpp"

int main(int argc, char** argv) { return cpmech::cli_main(argc, argv); }
