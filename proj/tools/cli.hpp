#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace repseq::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kIo = 3, kGuard = 4 };

struct Environment {
  std::optional<std::string> threads;  // REPSEQ_THREADS
};

Environment environment_from_process();

// Runs `repseq <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace repseq::cli
