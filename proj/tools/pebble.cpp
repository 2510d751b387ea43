#include "pebbling/cli.hpp"

int main(int argc, char** argv) { return pebbling::cli::run(argc, argv); }
