#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace dca {

// Deterministic random source. std::mt19937_64 output is fully specified by
// the standard, but the distributions are not, so the draws below are
// hand-specified to keep results identical across platforms and toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n), unbiased via rejection sampling. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (one value per call; no cached spare).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Fisher-Yates shuffle driven by below().
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

    // Derives an independent stream seed from (base, a, b). Used wherever a
    // reproducible per-item RNG is needed (fold shuffles, permutation repeats).
    static std::uint64_t derive(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
        std::uint64_t x = base;
        x = splitmix(x + 0x9e3779b97f4a7c15ULL + a);
        x = splitmix(x + 0x9e3779b97f4a7c15ULL + b);
        return x;
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    std::mt19937_64 engine_;
};

} // namespace dca
