#include "unproj/cli.hpp"

int main(int argc, char** argv) { return unproj::cli::run(argc, argv); }
