#pragma once

namespace hkd {

// Full command-line entry point. Exit codes: 0 success, 2 validation error,
// 3 budget exceeded, 4 invariant violation (envelope breach or backend
// disagreement). Failures print a structured error JSON to stderr.
int run_cli(int argc, char** argv);

}  // namespace hkd
