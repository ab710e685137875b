#include "../src/cli_main.hpp"

int main(int argc, char** argv) { return cyclecover::run_cli(argc, argv); }
