#pragma once

#include <iosfwd>

namespace inar {

// Entry point of the `inar` tool. Output goes to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace inar
