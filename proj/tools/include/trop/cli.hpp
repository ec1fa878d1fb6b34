#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trop {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Errors go to err as "error: <Code>: message".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trop
