#pragma once

// The `smatch` command line: gen, bench, report, search and verify.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "smatch/core.hpp"

namespace smatch {

/// Exit status 0 on success; search uses 1 for "no match"; 2 on any error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Decodes \xNN (two hex digits) and \\ escapes; any other backslash sequence
/// is an error. Returns nullopt on malformed input.
std::optional<std::vector<Byte>> decode_pattern_escapes(std::string_view s);

}  // namespace smatch
