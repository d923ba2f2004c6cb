#include "quditc/cli.hpp"

int main(int argc, char** argv) { return quditc::run_cli(argc, argv); }
