#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace tgalign {

// Thread budget: min(hardware, TG_ALIGN_THREADS). TG_ALIGN_THREADS=1 forces
// single-threaded execution; unset or invalid values fall back to hardware.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("TG_ALIGN_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return hw;
}

// Static block partition of [0, count). Each index is processed exactly once;
// callers must make per-index work independent so results cannot depend on
// scheduling.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const unsigned threads = std::min<std::size_t>(thread_budget(), count == 0 ? 1 : count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(threads);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t]() {
            const std::size_t begin = count * t / threads;
            const std::size_t end = count * (t + 1) / threads;
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace tgalign
