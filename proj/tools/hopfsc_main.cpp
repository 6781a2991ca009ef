#include "hopfsc/cli.hpp"

int main(int argc, char **argv) { return hopfsc::cli::run(argc, argv); }
