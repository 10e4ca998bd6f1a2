#include "scholarank/cli.hpp"

int main(int argc, char** argv) { return scholarank::run_cli(argc, argv); }
