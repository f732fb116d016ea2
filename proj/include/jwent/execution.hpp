#pragma once

namespace jwent {

/// Selects the OpenMP path or the single-threaded reference loop of a kernel.
/// Both paths run the same loop body; Serial exists for testing and benchmarks.
enum class Execution { Serial, Parallel };

/// Number of OpenMP threads a Parallel kernel would use.
int max_threads();

}  // namespace jwent
