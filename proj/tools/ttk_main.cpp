#include "ttk/cli.hpp"

int main(int argc, char** argv) { return ttk::cli::run(argc, argv); }
