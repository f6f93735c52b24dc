#include "hypterp/commands.hpp"

int main(int argc, char** argv) { return hypterp::cli::run_cli(argc, argv); }
