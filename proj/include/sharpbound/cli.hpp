#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sharpbound::cli {

// Runs one command; args excludes the program name. Reads the job JSON
// from --input FILE or `in`, writes one result JSON line to `out`.
// Returns the process exit code: 0 on success, 1 when a campaign found a
// counterexample inside a theorem-guaranteed region, 2 on malformed input
// or domain errors, reported as {"error":{"kind":...,"detail":...}}.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace sharpbound::cli
