#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pex {

// Symbols are 0-based and fit in 16 bits; n is capped at kMaxSymbols.
using Symbol = std::uint16_t;
inline constexpr int kMaxSymbols = 1024;

/// A permutation of Z_n stored as the image vector (value at position x).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<Symbol> image) : image_(std::move(image)) {
        check_bijective(image_);
    }

    static Permutation identity(int n) {
        check_n(n);
        std::vector<Symbol> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), Symbol{0});
        return Permutation(std::move(v), unchecked_tag{});
    }

    static Permutation from_ints(const std::vector<int>& vals) {
        std::vector<Symbol> v;
        v.reserve(vals.size());
        for (int x : vals) {
            if (x < 0 || x >= kMaxSymbols) throw std::invalid_argument("symbol out of range");
            v.push_back(static_cast<Symbol>(x));
        }
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(image_.size()); }
    Symbol operator[](int x) const { return image_[static_cast<std::size_t>(x)]; }
    std::span<const Symbol> span() const { return image_; }
    const std::vector<Symbol>& vec() const { return image_; }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;

    static void check_bijective(const std::vector<Symbol>& v) {
        check_n(static_cast<int>(v.size()));
        std::vector<bool> seen(v.size(), false);
        for (Symbol s : v) {
            if (s >= v.size() || seen[s]) throw std::invalid_argument("sequence is not a permutation of Z_n");
            seen[s] = true;
        }
    }

    struct unchecked_tag {};
    Permutation(std::vector<Symbol> image, unchecked_tag) : image_(std::move(image)) {}

private:
    static void check_n(int n) {
        if (n < 1 || n > kMaxSymbols) throw std::invalid_argument("n must be in [1, " + std::to_string(kMaxSymbols) + "]");
    }

    std::vector<Symbol> image_;
};

/// Number of positions where two equal-length symbol sequences differ.
/// Accepts arbitrary sequences, not only bijections.
inline int hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    int agree = 0;
    for (std::size_t i = 0; i < a.size(); ++i) agree += (a[i] == b[i]);
    return static_cast<int>(a.size()) - agree;
}

inline int hamming_distance(const Permutation& a, const Permutation& b) {
    return hamming_distance(a.span(), b.span());
}

inline int count_fixed_points(std::span<const Symbol> a) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += (a[i] == i);
    return c;
}

/// compose(f, g)(x) = f(g(x)).
inline Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw std::invalid_argument("compose: length mismatch");
    std::vector<Symbol> v(static_cast<std::size_t>(f.size()));
    for (int x = 0; x < f.size(); ++x) v[static_cast<std::size_t>(x)] = f[g[x]];
    return Permutation(std::move(v), Permutation::unchecked_tag{});
}

inline Permutation inverse(const Permutation& f) {
    std::vector<Symbol> v(static_cast<std::size_t>(f.size()));
    for (int x = 0; x < f.size(); ++x) v[f[x]] = static_cast<Symbol>(x);
    return Permutation(std::move(v), Permutation::unchecked_tag{});
}

}  // namespace pex
