#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ntrk/common.hpp"

namespace ntrk {

// A named, uniformly sampled multichannel signal. Data is channel-major:
// data[c * samples + t].
struct FeatureSeries {
    std::string name;
    size_t channels = 0;
    size_t samples = 0;
    double fs = 0.0;
    std::vector<double> data;
    std::vector<std::string> provenance;

    FeatureSeries() = default;
    FeatureSeries(std::string name_, size_t channels_, size_t samples_, double fs_)
        : name(std::move(name_)),
          channels(channels_),
          samples(samples_),
          fs(fs_),
          data(channels_ * samples_, 0.0) {}

    double& at(size_t c, size_t t) { return data[c * samples + t]; }
    double at(size_t c, size_t t) const { return data[c * samples + t]; }

    std::span<double> channel(size_t c) { return {data.data() + c * samples, samples}; }
    std::span<const double> channel(size_t c) const {
        return {data.data() + c * samples, samples};
    }

    double duration_s() const { return fs > 0 ? static_cast<double>(samples) / fs : 0.0; }

    void validate() const {
        if (samples == 0) throw ArgumentError("FeatureSeries '" + name + "': empty");
        if (fs <= 0) throw ArgumentError("FeatureSeries '" + name + "': fs must be positive");
        if (data.size() != channels * samples)
            throw ShapeError("FeatureSeries '" + name + "': data size mismatch");
    }

    // Copy of sample range [start, start+len) across all channels.
    FeatureSeries slice(size_t start, size_t len) const;

    void note(const std::string& step) { provenance.push_back(step); }
};

enum class VoiceClass { male, female };

std::string to_string(VoiceClass v);
VoiceClass voice_class_from_string(const std::string& s);

// One subject x story session: raw EEG plus the stimulus waveform.
struct Recording {
    std::string subject_id;
    std::string story_id;
    VoiceClass voice_class = VoiceClass::male;
    FeatureSeries eeg;       // channels x samples at native rate
    FeatureSeries stimulus;  // 1 x samples at native rate

    void validate(size_t expected_channels = 64) const;
};

// Basic vector helpers shared by dsp and tests.
double rms(std::span<const double> x);
double mean(std::span<const double> x);
double median(std::vector<double> x);  // by value: partially sorts its copy
double pearson(std::span<const double> a, std::span<const double> b);

}  // namespace ntrk
