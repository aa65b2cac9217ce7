#include "rydsim/cli.hpp"

int main(int argc, char** argv) { return rydsim::cli::run(argc, argv); }
