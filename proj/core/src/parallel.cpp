#include "qutrit_geom/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

#include "qutrit_geom/error.hpp"

namespace qg {

std::optional<unsigned> parse_thread_count(std::string_view text) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
        return std::nullopt;
    }
    return value;
}

unsigned worker_count() {
    if (const char *env = std::getenv(kThreadsEnvVar)) {
        auto parsed = parse_thread_count(env);
        if (!parsed) {
            throw Error(ErrorCode::InvalidArgument,
                        std::string(kThreadsEnvVar) + " must be a positive integer");
        }
        return *parsed;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(uint64_t n, unsigned chunks,
                     const std::function<void(uint64_t, uint64_t, unsigned)> &body) {
    if (n == 0) {
        return;
    }
    chunks = static_cast<unsigned>(std::clamp<uint64_t>(chunks, 1, n));
    if (chunks == 1) {
        body(0, n, 0);
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (unsigned k = 0; k < chunks; ++k) {
        const uint64_t begin = n * k / chunks;
        const uint64_t end = n * (k + 1) / chunks;
        threads.emplace_back([&, begin, end, k] {
            try {
                body(begin, end, k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

void parallel_for(uint64_t n, const std::function<void(uint64_t)> &body) {
    parallel_chunks(n, worker_count(), [&](uint64_t begin, uint64_t end, unsigned) {
        for (uint64_t i = begin; i < end; ++i) {
            body(i);
        }
    });
}

}  // namespace qg
