#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linemg::cli {

inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;

/// Runs one `linemg` command line. Data goes to `out`, diagnostics to `err`.
/// Returns 0 for a positive answer, 1 for a negative one, 2 for usage or
/// input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linemg::cli
