#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rimhook::cli {

// Dispatches one invocation: args without the program name. Writes one JSON
// document to out on success; domain errors land on err as {error, detail}
// with exit code 1, usage errors exit 2.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace rimhook::cli
