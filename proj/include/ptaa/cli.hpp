#pragma once

#include <ostream>

namespace ptaa {

inline constexpr const char* cli_schema = "ptaa-cli-1";

// full command-line surface; streams injected for in-process testing
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ptaa
