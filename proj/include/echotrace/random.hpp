#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "errors.hpp"

namespace echotrace {

// splitmix64 finalizer; used to derive independent stream seeds from a master
// seed plus a role tag, so that pipeline phases never share a stream.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded stream with a frozen draw discipline: uniform(), bernoulli() and
// rayleigh() consume exactly one raw draw, gaussian() exactly two. Callers
// draw in row-major order over matrices and in file order over examples, so
// a given seed always produces bit-identical results.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0,1), 53-bit resolution
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard normal, Box-Muller (two draws per value, no caching so the
    // stream position stays a pure function of the call count)
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

    // Rayleigh with scale sigma > 0
    double rayleigh(double sigma) {
        double u = uniform();
        return sigma * std::sqrt(-2.0 * std::log1p(-u));
    }

    // 1 with probability p; consumes one draw for every p, including 0 and 1
    int bernoulli(double p) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw domain_error("bernoulli: probability outside [0,1]");
        }
        return uniform() < p ? 1 : 0;
    }

    // Fisher-Yates, one draw per element above the first
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_u64() % i);
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    static constexpr double kTwoPi = 6.283185307179586476925286766559;

    std::mt19937_64 engine_;
    std::uint64_t seed_ = 0;
};

inline int sample_bernoulli(double p, RandomStream& rng) { return rng.bernoulli(p); }

} // namespace echotrace
