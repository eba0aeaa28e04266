#pragma once

#include <filesystem>
#include <iosfwd>

namespace dimap {

/// Exit codes: 0 success, 1 validation or input failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// $TRINITY_FIXTURES if set, otherwise the fixture directory of the source tree.
std::filesystem::path fixture_dir();

}  // namespace dimap
