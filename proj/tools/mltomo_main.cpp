#include "mltomo/cli.hpp"

int main(int argc, char **argv) { return mltomo::cli::run(argc, argv); }
