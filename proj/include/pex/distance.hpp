#pragma once

#include <atomic>
#include <cstdlib>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "pex/perm_array.hpp"
#include "pex/permutation.hpp"

namespace pex {

inline int default_thread_count() {
    if (const char* env = std::getenv("PEX_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

// Full agreement count; the loop is branch-free so it vectorizes.
inline int agreements(const Symbol* a, const Symbol* b, int n) {
    int c = 0;
    for (int i = 0; i < n; ++i) c += (a[i] == b[i]);
    return c;
}

constexpr std::uint64_t kNoKey = std::numeric_limits<std::uint64_t>::max();

struct PairScanResult {
    int min_distance = std::numeric_limits<int>::max();
    std::uint64_t min_key = kNoKey;   // row-major pair index achieving the minimum
    int viol_distance = 0;
    std::uint64_t viol_key = kNoKey;  // smallest pair index with distance < threshold
    std::uint64_t pairs_checked = 0;
};

// Scans unordered pairs (i < j) of rows of a, or the full grid a x b when b
// is given. With a threshold t, the scan stops early at the lexicographically
// smallest pair of distance < t; rows wholly beyond a found violation are
// skipped, which keeps the result deterministic under any thread count.
inline PairScanResult scan_pairs(const PermutationArray& a, const PermutationArray* b,
                                 std::optional<int> threshold, int threads) {
    const int n = a.num_symbols();
    const std::size_t rows_a = a.num_rows();
    const std::size_t rows_b = b ? b->num_rows() : rows_a;
    const std::uint64_t key_stride = rows_b;

    if (threads <= 0) threads = default_thread_count();
    std::atomic<std::size_t> next_row{0};
    std::atomic<std::uint64_t> stop_key{kNoKey};

    auto worker = [&](PairScanResult& local) {
        for (;;) {
            std::size_t i = next_row.fetch_add(1);
            if (i >= rows_a) break;
            if (threshold && static_cast<std::uint64_t>(i) * key_stride > stop_key.load(std::memory_order_relaxed))
                continue;
            auto ri = a.row(i);
            std::size_t j_begin = b ? 0 : i + 1;
            for (std::size_t j = j_begin; j < rows_b; ++j) {
                int agree = agreements(ri.data(), (b ? b->row(j) : a.row(j)).data(), n);
                int dist = n - agree;
                ++local.pairs_checked;
                std::uint64_t key = static_cast<std::uint64_t>(i) * key_stride + j;
                if (dist < local.min_distance || (dist == local.min_distance && key < local.min_key)) {
                    local.min_distance = dist;
                    local.min_key = key;
                }
                if (threshold && dist < *threshold) {
                    if (key < local.viol_key) {
                        local.viol_key = key;
                        local.viol_distance = dist;
                    }
                    std::uint64_t cur = stop_key.load(std::memory_order_relaxed);
                    while (key < cur && !stop_key.compare_exchange_weak(cur, key)) {}
                    break;  // later pairs in this row have larger keys
                }
            }
        }
    };

    std::vector<PairScanResult> locals(static_cast<std::size_t>(threads));
    if (threads == 1) {
        worker(locals[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back([&, t] { worker(locals[static_cast<std::size_t>(t)]); });
        for (auto& th : pool) th.join();
    }

    PairScanResult merged;
    for (const auto& l : locals) {
        merged.pairs_checked += l.pairs_checked;
        if (l.min_distance < merged.min_distance ||
            (l.min_distance == merged.min_distance && l.min_key < merged.min_key)) {
            merged.min_distance = l.min_distance;
            merged.min_key = l.min_key;
        }
        if (l.viol_key < merged.viol_key) {
            merged.viol_key = l.viol_key;
            merged.viol_distance = l.viol_distance;
        }
    }
    return merged;
}

inline void fill_report(DistanceReport& rep, const PairScanResult& res, std::uint64_t stride,
                        bool thresholded) {
    rep.pairs_checked = res.pairs_checked;
    std::uint64_t key;
    if (thresholded && res.viol_key != kNoKey) {
        // certifies only the < t verdict; the witness pair's own distance is exact
        rep.min_distance_found = res.viol_distance;
        key = res.viol_key;
    } else {
        rep.min_distance_found = res.min_distance;
        key = res.min_key;
    }
    if (key != kNoKey)
        rep.witness_pair = {static_cast<std::size_t>(key / stride), static_cast<std::size_t>(key % stride)};
}

}  // namespace detail

/// Exact minimum pairwise distance of an array. With early_exit_threshold t
/// the scan stops at the lexicographically smallest pair below t, so the
/// reported value then only certifies the >=t / <t verdict. A singleton array
/// reports n by convention.
inline DistanceReport min_distance(const PermutationArray& a,
                                   std::optional<int> early_exit_threshold = std::nullopt,
                                   int threads = 0) {
    if (a.num_rows() == 0) throw std::invalid_argument("min_distance: empty array");
    DistanceReport rep;
    rep.mode = DistanceReport::Mode::full;
    if (a.num_rows() == 1) {
        rep.min_distance_found = a.num_symbols();
        return rep;
    }
    auto res = detail::scan_pairs(a, nullptr, early_exit_threshold, threads);
    detail::fill_report(rep, res, a.num_rows(), early_exit_threshold.has_value());
    return rep;
}

inline DistanceReport cross_distance_report(const PermutationArray& a, const PermutationArray& b,
                                            std::optional<int> early_exit_threshold = std::nullopt,
                                            int threads = 0) {
    if (a.num_rows() == 0 || b.num_rows() == 0) throw std::invalid_argument("cross_distance: empty input");
    if (a.num_symbols() != b.num_symbols()) throw std::invalid_argument("cross_distance: length mismatch");
    DistanceReport rep;
    rep.mode = DistanceReport::Mode::full;
    auto res = detail::scan_pairs(a, &b, early_exit_threshold, threads);
    detail::fill_report(rep, res, b.num_rows(), early_exit_threshold.has_value());
    return rep;
}

/// Exact min over A x B.
inline int cross_distance(const PermutationArray& a, const PermutationArray& b, int threads = 0) {
    return cross_distance_report(a, b, std::nullopt, threads).min_distance_found;
}

}  // namespace pex
