#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace recurlab {

// Three-way outcome shared by the recurrence deciders: a certified return, a
// certified obstruction, or an exhausted search horizon.
enum class Verdict { Recurrent, NotRecurrent, Undecided };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Recurrent: return "Recurrent";
        case Verdict::NotRecurrent: return "NotRecurrent";
        case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

// Thread cap for the embarrassingly parallel sweeps. RECURLAB_THREADS=1 forces
// serial execution; unset falls back to the hardware count.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("RECURLAB_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

// Deterministic parallel map over [0, n): each index writes its own slot, so the
// result is identical regardless of the thread count.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    unsigned threads = std::min<std::size_t>(thread_cap(), n ? n : 1);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < n; i += threads) out[i] = fn(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace recurlab
