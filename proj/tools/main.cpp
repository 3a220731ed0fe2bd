#include "cli.hpp"

int main(int argc, char** argv) { return dvpack::cli::run(argc, argv); }
