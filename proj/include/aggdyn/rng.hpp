#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace aggdyn {

// Identification string recorded in run manifests.
inline constexpr const char* kRngId =
    "splitmix64; stream seed = mix(mix(mix(master_seed) ^ trajectory_index) ^ site)";

// Counter-based 64-bit generator (Weyl sequence + avalanche finalizer).
// Cheap, splittable, and deterministic across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on (0, 1]: never 0, so log() below is safe.
    double uniform_pos() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Uniform on [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard circular complex Gaussian: E[z conj(z)] = 1, E[z z] = 0.
    // Box-Muller in polar form; real and imaginary parts are N(0, 1/2).
    std::complex<double> complex_gaussian() {
        double r = std::sqrt(-std::log(uniform_pos()));
        double phi = 6.283185307179586476925286766559 * uniform01();
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    // Real standard normal.
    double gaussian() {
        double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        double phi = 6.283185307179586476925286766559 * uniform01();
        return r * std::cos(phi);
    }

private:
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

// Deterministic derivation of independent per-(trajectory, site) streams.
// Identical inputs give identical streams regardless of execution order or
// worker count; distinct inputs land in unrelated regions of the state space.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                        std::uint64_t trajectory_index,
                                        std::uint64_t site) {
    using detail::mix64;
    return mix64(mix64(mix64(master_seed) ^ trajectory_index) ^ site);
}

} // namespace aggdyn
