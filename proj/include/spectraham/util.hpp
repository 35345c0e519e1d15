#pragma once

#include <cstdint>
#include <string>

namespace spectraham {

/// Deterministic, platform-independent RNG (splitmix64 core). std:: engines
/// are avoided for generation because distribution output is
/// implementation-defined; seeded runs must reproduce byte-for-byte anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) via 128-bit multiply-shift.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int int_in(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return u01() < p; }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
        return r.next();
    }

private:
    std::uint64_t state_;
};

/// FNV-1a 64-bit hash, returned as "fnv1a64:<hex>"; used for canonical input
/// digests in reports.
std::string fnv1a64_digest(const std::string& data);

} // namespace spectraham
