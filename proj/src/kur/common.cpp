#include "kur/common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace kur {

double wrap_angle(double x) {
    double t = std::fmod(x, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;  // fmod rounding can land exactly on 2pi
    return t;
}

double circular_diff(double a, double b) {
    double d = std::fmod(a - b, kTwoPi);
    if (d <= -kPi)
        d += kTwoPi;
    else if (d > kPi)
        d -= kTwoPi;
    return d;
}

double circular_spread(std::vector<double> angles) {
    if (angles.size() < 2) return 0.0;
    for (double& a : angles) a = wrap_angle(a);
    std::sort(angles.begin(), angles.end());
    double max_gap = angles.front() + kTwoPi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i)
        max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    return kTwoPi - max_gap;
}

std::vector<double> random_phases(int n, std::uint64_t seed) {
    // splitmix-style seeding so nearby seeds give unrelated streams.
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL;
    auto next = [&s]() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::vector<double> out(static_cast<std::size_t>(n));
    for (double& v : out)
        v = static_cast<double>(next() >> 11) * 0x1.0p-53 * kTwoPi;
    return out;
}

void parallel_for(int count, const std::function<void(int)>& body) {
    if (count <= 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    int workers = static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 8));
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace kur
