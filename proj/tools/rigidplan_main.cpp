#include "rigidplan/cli.hpp"

int main(int argc, char** argv) { return rigidplan::cli::run(argc, argv); }
