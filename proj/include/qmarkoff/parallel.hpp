#pragma once

namespace qmarkoff {

/// Environment variable consulted when no explicit thread count is given.
inline constexpr const char* kThreadsEnvVar = "QMARKOFF_THREADS";

/// `requested` if positive, else $QMARKOFF_THREADS if set and positive,
/// else the OpenMP default.
int resolve_threads(int requested);

}  // namespace qmarkoff
