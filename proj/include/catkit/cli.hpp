#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catkit {

// Command-line driver (verbs: check, groth, mongroth, transfer, zoo,
// roundtrip).  Returns the process exit code: 0 = laws pass, 1 = a law
// failed (witness on the report stream), 2 = unusable input.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace catkit
