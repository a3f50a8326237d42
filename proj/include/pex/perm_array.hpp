#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pex/permutation.hpp"

namespace pex {

/// An ordered collection of permutations on Z_n, stored row-major in one
/// flat buffer so pairwise scans stay cache-friendly.
class PermutationArray {
public:
    PermutationArray() = default;

    explicit PermutationArray(int n) : n_(n) {
        if (n < 1 || n > kMaxSymbols) throw std::invalid_argument("PermutationArray: bad n");
    }

    static PermutationArray from_rows(int n, const std::vector<Permutation>& rows) {
        PermutationArray a(n);
        for (const auto& r : rows) a.append(r);
        return a;
    }

    int num_symbols() const { return n_; }
    std::size_t num_rows() const { return n_ == 0 ? 0 : data_.size() / static_cast<std::size_t>(n_); }
    bool empty() const { return data_.empty(); }

    std::span<const Symbol> row(std::size_t i) const {
        return {data_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
    }

    Permutation row_perm(std::size_t i) const {
        auto r = row(i);
        return Permutation(std::vector<Symbol>(r.begin(), r.end()), Permutation::unchecked_tag{});
    }

    void append(const Permutation& p) {
        if (p.size() != n_) throw std::invalid_argument("PermutationArray: row length mismatch");
        data_.insert(data_.end(), p.span().begin(), p.span().end());
        certified_min_distance.reset();
    }

    void append(std::span<const Symbol> r) {
        if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("PermutationArray: row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        certified_min_distance.reset();
    }

    // Unvalidated append used by readers; pair with validate_rows().
    void append_raw(const std::vector<Symbol>& r) {
        if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("PermutationArray: row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        certified_min_distance.reset();
    }

    void append_all(const PermutationArray& other) {
        if (other.n_ != n_) throw std::invalid_argument("PermutationArray: symbol count mismatch");
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        certified_min_distance.reset();
    }

    void reserve_rows(std::size_t count) { data_.reserve(count * static_cast<std::size_t>(n_)); }

    /// First structural problem found, or nullopt: a non-bijective row or a
    /// duplicate row (row indices reported 0-based).
    std::optional<std::string> validate_rows() const {
        std::vector<bool> seen(static_cast<std::size_t>(n_));
        std::unordered_set<std::string_view> rows_seen;
        for (std::size_t i = 0; i < num_rows(); ++i) {
            auto r = row(i);
            std::fill(seen.begin(), seen.end(), false);
            for (Symbol s : r) {
                if (s >= n_ || seen[s]) return "row " + std::to_string(i) + " is not a permutation of Z_n";
                seen[s] = true;
            }
            std::string_view key(reinterpret_cast<const char*>(r.data()), r.size() * sizeof(Symbol));
            if (!rows_seen.insert(key).second) return "duplicate row at index " + std::to_string(i);
        }
        return std::nullopt;
    }

    friend bool operator==(const PermutationArray& a, const PermutationArray& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

    /// Set by a verification pass; cleared by any mutation.
    std::optional<int> certified_min_distance;

private:
    int n_ = 0;
    std::vector<Symbol> data_;
};

/// Hash-set view of an array's rows, for membership and disjointness checks.
class RowSet {
public:
    explicit RowSet(const PermutationArray& a) : a_(&a) {
        keys_.reserve(a.num_rows());
        for (std::size_t i = 0; i < a.num_rows(); ++i) keys_.insert(key(a.row(i)));
    }

    bool contains(std::span<const Symbol> r) const { return keys_.count(key(r)) != 0; }
    std::size_t size() const { return keys_.size(); }

private:
    static std::string key(std::span<const Symbol> r) {
        return std::string(reinterpret_cast<const char*>(r.data()), r.size() * sizeof(Symbol));
    }
    const PermutationArray* a_;
    std::unordered_set<std::string> keys_;
};

struct DistanceReport {
    enum class Mode { full, coset_shortcut, sampled };

    Mode mode = Mode::full;
    int min_distance_found = 0;
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
    std::optional<std::uint64_t> sample_seed;

    bool certifies(int d) const { return min_distance_found >= d; }
};

inline const char* to_string(DistanceReport::Mode m) {
    switch (m) {
        case DistanceReport::Mode::full: return "full";
        case DistanceReport::Mode::coset_shortcut: return "coset";
        case DistanceReport::Mode::sampled: return "sampled";
    }
    return "?";
}

}  // namespace pex
