#include "sna/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sna {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void for_blocks(std::int64_t count, std::int64_t block_size, int threads,
                const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (count <= 0) return;
    const std::int64_t blocks = (count + block_size - 1) / block_size;
    const int workers = static_cast<int>(
        std::min<std::int64_t>(resolve_threads(threads), blocks));
    if (workers <= 1) {
        for (std::int64_t b = 0; b < blocks; ++b) {
            fn(b * block_size, std::min(count, (b + 1) * block_size));
        }
        return;
    }

    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::int64_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= blocks) break;
            try {
                fn(b * block_size, std::min(count, (b + 1) * block_size));
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace sna
