#pragma once

#include <algorithm>
#include <exception>
#include <thread>

namespace fbmx {

template <class MakeWorker>
std::vector<double> run_paths(std::size_t paths, unsigned threads, MakeWorker&& make_worker) {
    std::vector<double> out(paths);
    const std::size_t workers = std::min<std::size_t>(std::max(1u, resolve_thread_count(threads)),
                                                      std::max<std::size_t>(paths, 1));
    const std::size_t block = (paths + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](std::size_t w) {
        try {
            auto body = make_worker();
            const std::size_t begin = w * block;
            const std::size_t end = std::min(paths, begin + block);
            for (std::size_t p = begin; p < end; ++p) out[p] = body(p);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace fbmx
