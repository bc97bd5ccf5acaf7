#include "parkfact/cli.hpp"

int main(int argc, char** argv) { return parkfact::run_cli(argc, argv); }
