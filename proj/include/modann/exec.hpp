#pragma once

namespace modann {

/// Which implementation of a data-parallel kernel to run. Serial is the
/// plain reference loop kept for cross-checking; Parallel is the OpenMP
/// kernel. Both produce identical results.
enum class Exec { Serial, Parallel };

/// Number of OpenMP threads used by Parallel kernels (0 = runtime default).
void setThreadCount(int threads);
int threadCount();

} // namespace modann
