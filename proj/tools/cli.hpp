#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ling::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one lingadd invocation. `args` excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// 0b-prefixed binary, 0x-prefixed hex or decimal. nullopt on junk or overflow.
std::optional<std::uint64_t> parse_operand(std::string_view text);

}  // namespace ling::cli
