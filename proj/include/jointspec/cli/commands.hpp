#pragma once

#include <ostream>
#include <stdexcept>

namespace jointspec::cli {

/// Exit codes.
constexpr int kPass = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entry point of the command-line tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jointspec::cli
