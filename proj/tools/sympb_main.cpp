#include "sympb/cli.hpp"

int main(int argc, char** argv) { return sympb::cli_main(argc, argv); }
