#pragma once

#include <cstdint>
#include <vector>

#include "pex/permutation.hpp"

namespace pex {

// splitmix64: tiny, well-mixed, and identical on every platform, unlike
// std::uniform_int_distribution whose output is implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // unbiased draw from [0, bound) by rejection
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::uint64_t state_;
};

inline Permutation random_permutation(int n, SplitMix64& rng) {
    std::vector<Symbol> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<Symbol>(i);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(v[static_cast<std::size_t>(i)], v[j]);
    }
    return Permutation(std::move(v), Permutation::unchecked_tag{});
}

}  // namespace pex
