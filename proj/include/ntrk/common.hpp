#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ntrk {

// Error taxonomy, mapped to CLI exit codes (usage=1, data=2, numeric=3).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DesignError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic RNG. The engine is the standardized mt19937_64 sequence;
// all distributions are implemented here rather than via <random>
// distribution classes, whose output is implementation-defined.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    // Derives an independent stream, e.g. per (seed, epoch) or (seed, subject).
    static Rng derive(uint64_t seed, uint64_t stream) {
        return Rng(splitmix64(seed ^ splitmix64(stream + 0x51ed2701)));
    }

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). Rejection sampling, exact.
    uint64_t below(uint64_t n) {
        if (n == 0) throw ArgumentError("Rng::below: n must be positive");
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (size_t i = v.size() - 1; i > 0; --i) {
            size_t j = static_cast<size_t>(below(i + 1));
            std::swap(v[i], v[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Worker count: NTRK_WORKERS env var, else hardware concurrency.
size_t worker_count();

// Runs jobs 0..n-1 on up to worker_count() threads. Each job writes only to
// its own slot, so results are identical regardless of scheduling.
void parallel_for(size_t n, const std::function<void(size_t)>& job);
void parallel_for(size_t n, size_t workers, const std::function<void(size_t)>& job);

}  // namespace ntrk
