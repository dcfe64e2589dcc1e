#include "eitangle/cli.hpp"

int main(int argc, char** argv) { return eitangle::cli::run(argc, argv); }
