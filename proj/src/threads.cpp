#include "golod/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace golod {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("GOLODKIT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn) {
    int workers = worker_count();
    if (workers <= 1 || n < 32) {
        fn(0, n);
        return;
    }
    size_t chunk = (n + static_cast<size_t>(workers) - 1) / static_cast<size_t>(workers);
    std::vector<std::thread> pool;
    for (size_t begin = 0; begin < n; begin += chunk) {
        size_t end = std::min(n, begin + chunk);
        pool.emplace_back(fn, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace golod
