#pragma once

#include <cstdint>
#include <vector>

namespace hypercross {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 because
// every consumer of a seed here must produce bit-identical streams on any
// platform, and the whole algorithm fits on one screen:
//
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
//
// Independent per-trial streams are derived as Rng(seed).fork(trial).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Stream for sub-task `index`, decorrelated from this seed's own stream.
    Rng fork(std::uint64_t index) const {
        Rng base(state_);
        std::uint64_t s = base.next();
        Rng mix(index ^ 0x5851f42d4c957f2dULL);
        return Rng(s ^ mix.next());
    }

    // Uniform on [0, n). Rejection sampling, so exactly uniform.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        std::uint64_t r;
        do {
            r = next();
        } while (r < threshold);
        return r % n;
    }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t state_;
};

}  // namespace hypercross
