#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bf {

// BRAIDFORGE_THREADS caps the worker count; default is the hardware count
inline int thread_count()
{
    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1)
        hw = 1;
    if (const char* s = std::getenv("BRAIDFORGE_THREADS")) {
        try {
            int v = std::stoi(s);
            if (v >= 1)
                return std::min(v, hw);
        } catch (...) {
        }
    }
    return hw;
}

// f(i) for i in [0, n); strided over workers, first exception rethrown
template <class F>
void parallel_for(size_t n, F&& f)
{
    size_t t = std::min<size_t>(size_t(thread_count()), n);
    if (t <= 1) {
        for (size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::exception_ptr err;
    std::mutex m;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w; i < n; i += t)
                    f(i);
            } catch (...) {
                std::lock_guard lk(m);
                if (!err)
                    err = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

} // namespace bf
