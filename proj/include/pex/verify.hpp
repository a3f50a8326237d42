#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pex/distance.hpp"
#include "pex/perm_array.hpp"
#include "pex/permutation.hpp"
#include "pex/prng.hpp"

namespace pex {

/// Closure/identity/inverse check. Exhaustive for small arrays, sampled
/// (deterministically seeded) beyond pair_limit pairs.
inline bool is_group(const PermutationArray& g, std::uint64_t pair_limit = 1u << 18,
                     std::uint64_t seed = 0x9e3779b9ULL) {
    const std::size_t m = g.num_rows();
    if (m == 0) return false;
    RowSet rows(g);
    if (!rows.contains(Permutation::identity(g.num_symbols()).span())) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (!rows.contains(inverse(g.row_perm(i)).span())) return false;
    }
    auto composed_in = [&](std::size_t i, std::size_t j) {
        return rows.contains(compose(g.row_perm(i), g.row_perm(j)).span());
    };
    if (m * m <= pair_limit) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (!composed_in(i, j)) return false;
    } else {
        SplitMix64 rng(seed);
        for (std::uint64_t t = 0; t < 10000; ++t) {
            if (!composed_in(static_cast<std::size_t>(rng.below(m)), static_cast<std::size_t>(rng.below(m))))
                return false;
        }
    }
    return true;
}

/// hd(G) for a group G: distinct rows g1, g2 satisfy
/// hd(g1,g2) = n - fix(g1^-1 g2), so the minimum is over non-identity rows.
inline int group_min_distance(const PermutationArray& g) {
    if (g.num_rows() == 0) throw std::invalid_argument("group_min_distance: empty array");
    const int n = g.num_symbols();
    int best = n;
    for (std::size_t i = 0; i < g.num_rows(); ++i) {
        auto r = g.row(i);
        int fix = count_fixed_points(r);
        if (fix == n) continue;  // identity row
        best = std::min(best, n - fix);
    }
    return best;
}

/// Exact hd(alpha G, beta G) in O(|G| n) instead of O(|G|^2 n):
/// hd(alpha g, beta h) = n - fix(g^-1 (alpha^-1 beta) h), and every element
/// of the double coset G w G is conjugate to an element of wG, so the
/// maximum fixed-point count over G w G is attained on wG already.
inline int coset_min_distance(const PermutationArray& g, const Permutation& alpha,
                              const Permutation& beta, bool check_group = false) {
    if (g.num_rows() == 0) throw std::invalid_argument("coset_min_distance: empty group");
    const int n = g.num_symbols();
    if (alpha.size() != n || beta.size() != n)
        throw std::invalid_argument("coset_min_distance: length mismatch");
    if (check_group && !is_group(g)) throw std::invalid_argument("coset_min_distance: not a group");
    Permutation w = compose(inverse(alpha), beta);
    int max_fix = 0;
    for (std::size_t i = 0; i < g.num_rows(); ++i) {
        auto h = g.row(i);
        int fix = 0;
        for (int x = 0; x < n; ++x) fix += (w[h[static_cast<std::size_t>(x)]] == x);
        max_fix = std::max(max_fix, fix);
        if (max_fix == n) break;
    }
    return n - max_fix;
}

struct VerifySpec {
    enum class Mode { full, sampled, coset };
    Mode mode = Mode::full;

    // sampled
    std::uint64_t sample_pairs = 1'000'000;
    std::uint64_t seed = 0;

    // coset: the array must be the concatenation of blocks reps[b] * G
    const PermutationArray* group = nullptr;
    std::vector<Permutation> reps;

    static VerifySpec full_scan() { return {}; }
    static VerifySpec sampled_scan(std::uint64_t pairs, std::uint64_t seed) {
        VerifySpec s;
        s.mode = Mode::sampled;
        s.sample_pairs = pairs;
        s.seed = seed;
        return s;
    }
    static VerifySpec coset_scan(const PermutationArray& g, std::vector<Permutation> reps) {
        VerifySpec s;
        s.mode = Mode::coset;
        s.group = &g;
        s.reps = std::move(reps);
        return s;
    }
};

namespace detail {

inline DistanceReport verify_sampled(const PermutationArray& a, int claimed_d, std::uint64_t pairs,
                                     std::uint64_t seed) {
    DistanceReport rep;
    rep.mode = DistanceReport::Mode::sampled;
    rep.sample_seed = seed;
    rep.min_distance_found = a.num_symbols();
    const std::size_t m = a.num_rows();
    if (m < 2) return rep;
    SplitMix64 rng(seed);
    const int n = a.num_symbols();
    for (std::uint64_t t = 0; t < pairs; ++t) {
        auto i = static_cast<std::size_t>(rng.below(m));
        auto j = static_cast<std::size_t>(rng.below(m));
        while (j == i) j = static_cast<std::size_t>(rng.below(m));
        int dist = n - agreements(a.row(i).data(), a.row(j).data(), n);
        ++rep.pairs_checked;
        if (dist < rep.min_distance_found) {
            rep.min_distance_found = dist;
            rep.witness_pair = {std::min(i, j), std::max(i, j)};
        }
        if (dist < claimed_d) break;  // witness recorded
    }
    return rep;
}

inline DistanceReport verify_coset(const PermutationArray& a, int claimed_d, const VerifySpec& spec,
                                   int threads) {
    const PermutationArray& g = *spec.group;
    const std::size_t block = g.num_rows();
    const std::size_t k = spec.reps.size();
    if (block == 0 || k == 0 || a.num_rows() != block * k)
        throw std::invalid_argument("verify_pa(coset): row count does not match reps x |G|");
    const int n = a.num_symbols();
    if (g.num_symbols() != n) throw std::invalid_argument("verify_pa(coset): symbol count mismatch");

    DistanceReport rep;
    rep.mode = DistanceReport::Mode::coset_shortcut;
    rep.min_distance_found = n;

    // block structure: every row of block b must lie in reps[b] * G
    RowSet grows(g);
    for (std::size_t b = 0; b < k; ++b) {
        Permutation inv_rep = inverse(spec.reps[b]);
        for (std::size_t i = 0; i < block; ++i) {
            if (!grows.contains(compose(inv_rep, a.row_perm(b * block + i)).span()))
                throw std::invalid_argument("verify_pa(coset): block " + std::to_string(b) +
                                            " is not a coset of the given group");
        }
    }

    // intra-block full scans
    for (std::size_t b = 0; b < k; ++b) {
        PermutationArray blk(n);
        blk.reserve_rows(block);
        for (std::size_t i = 0; i < block; ++i) blk.append(a.row(b * block + i));
        auto sub = min_distance(blk, claimed_d, threads);
        rep.pairs_checked += sub.pairs_checked;
        if (sub.min_distance_found < rep.min_distance_found) {
            rep.min_distance_found = sub.min_distance_found;
            if (sub.witness_pair)
                rep.witness_pair = {b * block + sub.witness_pair->first, b * block + sub.witness_pair->second};
        }
    }

    // cross-block distances via the coset shortcut
    for (std::size_t b1 = 0; b1 < k; ++b1) {
        for (std::size_t b2 = b1 + 1; b2 < k; ++b2) {
            int dist = coset_min_distance(g, spec.reps[b1], spec.reps[b2]);
            rep.pairs_checked += g.num_rows();
            rep.min_distance_found = std::min(rep.min_distance_found, dist);
        }
    }
    return rep;
}

}  // namespace detail

/// Certifies hd(A) >= claimed_d under the requested mode. Violations are
/// reported through the DistanceReport (witness_pair), never thrown.
inline DistanceReport verify_pa(const PermutationArray& a, int claimed_d, const VerifySpec& spec = {},
                                int threads = 0) {
    switch (spec.mode) {
        case VerifySpec::Mode::full:
            return min_distance(a, claimed_d, threads);
        case VerifySpec::Mode::sampled:
            return detail::verify_sampled(a, claimed_d, spec.sample_pairs, spec.seed);
        case VerifySpec::Mode::coset:
            return detail::verify_coset(a, claimed_d, spec, threads);
    }
    throw std::logic_error("verify_pa: bad mode");
}

}  // namespace pex
