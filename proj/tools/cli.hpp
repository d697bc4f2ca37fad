#pragma once

// ============================================================================
// The experiment command-line driver, exposed as a function so test code
// can invoke it in-process and assert on exit codes. Exit contract:
// 0 success, 1 usage/file errors, 2 numerical failures.
// ============================================================================

namespace teim {

int run_cli(int argc, const char* const* argv);

}  // namespace teim
