#pragma once

#include <string>
#include <vector>

namespace eitangle::cli {

// Exit codes shared by the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitScenarioFailed = 2;  // a reproduce assertion failed
inline constexpr int kExitUsage = 64;          // bad flags / unknown scenario
inline constexpr int kExitRegime = 65;         // regime precondition violated
inline constexpr int kExitCantCreate = 73;     // unwritable output path
inline constexpr int kExitInternal = 70;

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args);

int run(int argc, const char* const* argv);

}  // namespace eitangle::cli
