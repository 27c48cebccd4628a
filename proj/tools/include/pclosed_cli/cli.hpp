#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace pclosed::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name) in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One embedded worked-example check. `check` returns an empty string on
/// success and a short diagnostic otherwise; it may also throw.
struct Fixture {
    std::string name;
    std::function<std::string()> check;
};

const std::vector<Fixture>& worked_examples();

}  // namespace pclosed::cli
