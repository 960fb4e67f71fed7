#include "spinring/cli.hpp"

int main(int argc, char** argv) { return spinring::cli::run(argc, argv); }
