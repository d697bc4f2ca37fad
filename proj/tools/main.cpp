#include "cli.hpp"

int main(int argc, char** argv) { return teim::run_cli(argc, argv); }
