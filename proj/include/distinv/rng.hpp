#ifndef DISTINV_RNG_HPP
#define DISTINV_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace distinv {

// Seeded generator with portable bounded draws. mt19937_64 output is pinned
// by the standard; the rejection loop below avoids the implementation-defined
// std::uniform_int_distribution, so identical seeds give identical streams on
// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    int int_in(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Sorted k-subset of {1..universe}.
    std::vector<int> subset(int k, int universe) {
        std::vector<int> pool(universe);
        for (int i = 0; i < universe; ++i) pool[i] = i + 1;
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(below(static_cast<std::uint64_t>(universe - i)));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> out(pool.begin(), pool.begin() + k);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::mt19937_64 eng_;
};

// Stable per-task seed derivation (splitmix64 over the mixed inputs).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t z = base ^ (stream * 0x9e3779b97f4a7c15ull) ^ (index + 0x632be59bd9b4e019ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace distinv

#endif
