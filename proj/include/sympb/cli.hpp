#pragma once

#include <string>
#include <vector>

namespace sympb {

// Command-line entry point; returns the process exit status:
//   0 all checks passed / artifacts written
//   1 at least one check failed
//   2 usage error
//   3 table or curve validation error
int cli_main(int argc, char** argv);
int cli_main(const std::vector<std::string>& args);

}  // namespace sympb
