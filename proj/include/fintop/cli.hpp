#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fintop::cli {

enum class Verdict { Pass, Fail };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// Outcome of one command. Input and format errors never produce a report;
/// they exit with kExitInput and a diagnostic on stderr.
struct RunReport {
    std::string command;
    /// (path, sha256 hex digest)
    std::vector<std::pair<std::string, std::string>> inputs;
    Verdict verdict = Verdict::Pass;
    std::vector<std::string> details;

    int exit_code() const noexcept { return verdict == Verdict::Pass ? kExitPass : kExitFail; }
    void fail() noexcept { verdict = Verdict::Fail; }
    void render(std::ostream& out) const;
};

/// Entry point shared by the executable and the tests. args excludes argv[0].
/// Payload goes to out, diagnostics (and census wall time) to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& bytes);

} // namespace fintop::cli
