#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ues {

// Longest supported swallow, in network time steps.
inline constexpr int kMaxFrames = 90;
// Signal samples per time step at the preprocessed rate.
inline constexpr int kChunkSamples = 66;
inline constexpr double kRawRateHz = 20000.0;
inline constexpr double kPreprocessedRateHz = 4000.0;
inline constexpr int kDecimationFactor = 5;
inline constexpr int kNumChannels = 3;
// Video frame rate used when durations are reported in milliseconds.
inline constexpr double kVideoFps = 30.0;

enum class SignalStage : std::uint8_t { raw20k = 0, preprocessed4k = 1 };

const char* to_string(SignalStage stage);

// One swallow's tri-axial acceleration trace. Channel order is fixed:
// superior-inferior, anterior-posterior, medial-lateral.
struct SwallowRecord {
    std::string id;
    std::array<std::vector<double>, kNumChannels> channels;
    double sample_rate_hz = kRawRateHz;
    SignalStage stage = SignalStage::raw20k;

    std::size_t length() const { return channels[0].size(); }
};

enum Channel { kSI = 0, kAP = 1, kML = 2 };

// Ground truth for one swallow: frame of first opening and frame of first
// re-closure, 0-based and relative to segment onset. closure_frame is the
// exclusive end of the open run.
struct KinematicLabel {
    std::string swallow_id;
    int n_frames = 0;
    int opening_frame = 0;
    int closure_frame = 0;
    double fps = kVideoFps;
};

// Per-frame open/closed vector padded to kMaxFrames. values may be binary
// (reference) or probabilistic (network output); validity marks real frames.
struct FrameMask {
    std::array<double, kMaxFrames> values{};
    std::array<std::uint8_t, kMaxFrames> validity{};
    int n_frames = 0;
};

struct Confusion {
    long tp = 0, tn = 0, fp = 0, fn = 0;
    long total() const { return tp + tn + fp + fn; }
};

// Per-swallow evaluation row. Boundary errors are predicted - truth, in
// frames; positive means the prediction is late. detected is false when the
// predicted mask never crossed the decision threshold.
struct EvalRecord {
    std::string swallow_id;
    Confusion confusion;
    bool detected = true;
    int opening_error_frames = 0;
    int closure_error_frames = 0;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

// Checks every record/label invariant and returns the list of breaches.
ValidationReport validate_record(const SwallowRecord& rec, const KinematicLabel& lab);

// Copies values into the first slots of a FrameMask and zero-pads the rest.
// Throws SizeError when values is empty or longer than kMaxFrames.
FrameMask pad_mask(const std::vector<double>& values);

} // namespace ues
