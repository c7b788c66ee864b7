#pragma once

// Deterministic fan-out helper.  Results are collected in index order, so any
// thread count yields identical output; the count is a process-wide setting.

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cohsys {

void set_thread_count(unsigned n);  // 0 and 1 both mean serial
unsigned thread_count();

// f(i) -> R for i in [0, jobs); returns results indexed by i
template <class R, class F>
std::vector<R> run_indexed(std::size_t jobs, F f) {
    std::vector<R> out(jobs);
    unsigned workers = thread_count();
    if (workers <= 1 || jobs <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) out[i] = f(i);
        return out;
    }
    if (workers > jobs) workers = static_cast<unsigned>(jobs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mtx;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= jobs) return;
                    out[i] = f(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mtx);
                if (!err) err = std::current_exception();
                next.store(jobs);  // drain remaining work
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace cohsys
