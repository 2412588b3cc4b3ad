#include "braess/harness.hpp"

int main(int argc, char** argv) { return braess::run_cli(argc, argv); }
