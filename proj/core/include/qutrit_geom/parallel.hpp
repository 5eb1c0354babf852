#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace qg {

inline constexpr const char *kThreadsEnvVar = "QUTRIT_GEOM_THREADS";

/// Parses a positive integer thread cap; nullopt for anything else.
std::optional<unsigned> parse_thread_count(std::string_view text);

/// Worker cap from QUTRIT_GEOM_THREADS, or hardware concurrency when unset.
/// Throws InvalidArgument when the variable is set but not a positive integer.
unsigned worker_count();

/// Calls body(i) for i in [0, n) over contiguous chunks, one per worker.
/// Callers write results by index, so output order never depends on scheduling.
void parallel_for(uint64_t n, const std::function<void(uint64_t)> &body);

/// Calls body(begin, end, chunk) once per contiguous chunk.
void parallel_chunks(uint64_t n, unsigned chunks,
                     const std::function<void(uint64_t, uint64_t, unsigned)> &body);

}  // namespace qg
