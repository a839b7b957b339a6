#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace tuttelab {

// Worker count: TUTTELAB_THREADS if set, else hardware concurrency, clamped.
inline int thread_count() {
    if (const char* env = std::getenv("TUTTELAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return std::clamp<int>(static_cast<int>(hw), 1, 8);
}

}  // namespace tuttelab
