#include "fringelab/cli.hpp"

int main(int argc, char** argv) { return fringelab::run_cli(argc, argv); }
