#pragma once

namespace cyclecover {

// Full command-line entry point; returns the process exit code
// (0 success, 1 refused request, 2 malformed input).
int run_cli(int argc, char** argv);

}  // namespace cyclecover
