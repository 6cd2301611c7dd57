#include "gl2/cli.hpp"

int main(int argc, char** argv) { return gl2::cli::run(argc, argv); }
