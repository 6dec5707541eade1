#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbd::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // a yes/no verb answered no
  kParse = 2,
  kDisconnected = 3,
  kShape = 4,
  kFailure = 5,
  kUsage = 64,
};

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

// "60s", "1.5m", "500ms" or a bare number of seconds.
double parse_duration(const std::string& text);

}  // namespace rbd::cli
