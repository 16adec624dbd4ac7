#include "ntrk/signal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>

namespace ntrk {

size_t worker_count() {
    if (const char* env = std::getenv("NTRK_WORKERS")) {
        long n = std::atol(env);
        if (n > 0) return static_cast<size_t>(n);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

void parallel_for(size_t n, size_t workers, const std::function<void(size_t)>& job) {
    if (n == 0) return;
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) job(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) break;
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

void parallel_for(size_t n, const std::function<void(size_t)>& job) {
    parallel_for(n, worker_count(), job);
}

FeatureSeries FeatureSeries::slice(size_t start, size_t len) const {
    if (start + len > samples)
        throw ArgumentError("FeatureSeries::slice: range [" + std::to_string(start) + ", " +
                            std::to_string(start + len) + ") exceeds " + std::to_string(samples) +
                            " samples");
    FeatureSeries out(name, channels, len, fs);
    out.provenance = provenance;
    for (size_t c = 0; c < channels; ++c) {
        const double* src = data.data() + c * samples + start;
        std::copy(src, src + len, out.data.data() + c * len);
    }
    return out;
}

std::string to_string(VoiceClass v) { return v == VoiceClass::male ? "male" : "female"; }

VoiceClass voice_class_from_string(const std::string& s) {
    if (s == "male") return VoiceClass::male;
    if (s == "female") return VoiceClass::female;
    throw ArgumentError("unknown voice class '" + s + "'");
}

void Recording::validate(size_t expected_channels) const {
    eeg.validate();
    stimulus.validate();
    if (eeg.channels != expected_channels)
        throw ArgumentError("Recording " + subject_id + "/" + story_id + ": expected " +
                            std::to_string(expected_channels) + " EEG channels, got " +
                            std::to_string(eeg.channels));
    if (stimulus.channels != 1)
        throw ArgumentError("Recording: stimulus must be single-channel");
    if (std::abs(eeg.duration_s() - stimulus.duration_s()) > 0.5)
        throw ArgumentError("Recording " + subject_id + "/" + story_id +
                            ": EEG and stimulus durations differ by more than 0.5 s");
}

double rms(std::span<const double> x) {
    if (x.empty()) return 0.0;
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s / static_cast<double>(x.size()));
}

double mean(std::span<const double> x) {
    if (x.empty()) return 0.0;
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double median(std::vector<double> x) {
    if (x.empty()) throw ArgumentError("median of empty range");
    size_t mid = x.size() / 2;
    std::nth_element(x.begin(), x.begin() + mid, x.end());
    double hi = x[mid];
    if (x.size() % 2 == 1) return hi;
    double lo = *std::max_element(x.begin(), x.begin() + mid);
    return 0.5 * (lo + hi);
}

double pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty())
        throw ArgumentError("pearson: ranges must be non-empty and equal length");
    double ma = mean(a), mb = mean(b);
    double saa = 0, sbb = 0, sab = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        double da = a[i] - ma, db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    double denom = std::sqrt(saa * sbb);
    return denom > 0 ? sab / denom : 0.0;
}

}  // namespace ntrk
