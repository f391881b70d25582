#include "dcor/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace dcor {

int worker_count() {
    const char* env = std::getenv("DCOR_THREADS");
    long requested = 0;
    if (env && *env) {
        char* end = nullptr;
        requested = std::strtol(env, &end, 10);
        if (end == env || requested < 0) requested = 0;
    }
    if (requested == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw > 16 ? 16 : hw);
    }
    return static_cast<int>(requested > 256 ? 256 : requested);
}

void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& f) {
    int workers = worker_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                f(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace dcor
