#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace ues {

// Deterministic RNG. mt19937_64 output is pinned by the standard; the
// distribution transforms live here instead of <random> because the standard
// leaves those implementation-defined and every seeded run must replay
// bit-identically.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1) with 53-bit resolution
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // integer in [0, n) without modulo bias
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = engine_(); } while (v >= limit);
        return v % n;
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive bounds
        return lo + std::int64_t(below(std::uint64_t(hi - lo + 1)));
    }

    double normal(double mean = 0.0, double stddev = 1.0) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + stddev * spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double scale = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * scale;
        have_spare_ = true;
        return mean + stddev * u * scale;
    }

    bool bernoulli(double p) { return uniform() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    // Independent child stream, e.g. one per fold or per swallow.
    Rng split(std::uint64_t stream) const {
        return Rng(mix(seed_base(), stream));
    }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        // splitmix64 finalizer over the combined words
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t seed_base() const {
        // the engine state is opaque; derive child seeds from a copy's output
        std::mt19937_64 probe = engine_;
        return probe();
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace ues
