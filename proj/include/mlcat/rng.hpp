#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace mlcat {

// splitmix64 stream. Self-contained so that draws are bit-identical across
// platforms and standard library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // uniform in {0, ..., n-1}
    int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }

    // standard normal via Box-Muller
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

namespace stream {
// Named substream tags. Components draw from disjoint streams so that
// toggling one (e.g. disabling the attack) never shifts another's draws.
inline constexpr uint64_t model_init = 0x6d6f64656c696e69ull;
inline constexpr uint64_t shuffle = 0x7368756666686c65ull;
inline constexpr uint64_t train_attack = 0x747261696e61746bull;
inline constexpr uint64_t eval_attack = 0x6576616c5f61746bull;
inline constexpr uint64_t hist_attack = 0x686973745f61746bull;
inline constexpr uint64_t data_train = 0x646174615f747261ull;
inline constexpr uint64_t data_test = 0x646174615f746573ull;
}  // namespace stream

inline uint64_t mix_key(uint64_t h, uint64_t k) {
    h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    uint64_t z = h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Derive a deterministic substream from a root seed and a key path,
// e.g. substream(seed, {stream::train_attack, epoch, example_id}).
inline Rng substream(uint64_t root_seed, std::initializer_list<uint64_t> path) {
    uint64_t h = mix_key(0x243f6a8885a308d3ull, root_seed);
    for (uint64_t k : path) h = mix_key(h, k);
    return Rng(h);
}

}  // namespace mlcat
