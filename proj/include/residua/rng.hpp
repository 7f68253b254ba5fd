#pragma once

#include <cstdint>
#include <string>

namespace residua {

// Deterministic splittable PRNG (splitmix64 core). Identical streams on every
// platform; child streams are derived by hashing a label into the seed.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t next(std::uint64_t n) {
        std::uint64_t lim = ~0ull - ~0ull % n;
        std::uint64_t v;
        do { v = next_u64(); } while (v >= lim);
        return v % n;
    }

    SplitRng split(const std::string& label) {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : label) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return SplitRng(next_u64() ^ h);
    }

private:
    std::uint64_t state_;
};

} // namespace residua
