#include "isoeof/cli.hpp"

int main(int argc, char** argv) { return isoeof::cli::main_entry(argc, argv); }
