#include "dsl/cli.hpp"

int main(int argc, char** argv) { return dsl::run_cli(argc, argv); }
