#include "montame/cli.hpp"

int main(int argc, char** argv) { return montame::run_cli(argc, argv); }
