#include "solsol/cli.hpp"

int main(int argc, char** argv) { return solsol::cli_main(argc, argv); }
