#pragma once

#include <cstdint>
#include <functional>

namespace sna {

// 0 means "use hardware concurrency".
int resolve_threads(int requested);

// Runs fn(begin, end) over fixed-size blocks of [0, count). Block boundaries
// depend only on count and block_size, never on the worker count, so callers
// that merge per-block results in block order get bit-identical output for
// any number of threads.
void for_blocks(std::int64_t count, std::int64_t block_size, int threads,
                const std::function<void(std::int64_t, std::int64_t)>& fn);

inline constexpr std::int64_t kDefaultBlockSize = 64;

}  // namespace sna
