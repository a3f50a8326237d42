#pragma once

#include <string>
#include <vector>

#include "pex/partition.hpp"
#include "pex/perm_array.hpp"

namespace pex {

struct ExtendOptions {
    bool validate_first = true;
    ValidateOptions vopts;
};

namespace detail {

inline void throw_if_invalid(const ValidationReport& rep, const char* what) {
    if (!rep.valid) throw std::invalid_argument(std::string(what) + ": invalid system: " + rep.first_violation);
}

// ext_p(sigma): sigma'(p) = n, sigma'(n) = sigma(p), rest unchanged.
inline std::vector<Symbol> ext_at(std::span<const Symbol> row, int p, int n) {
    std::vector<Symbol> out(static_cast<std::size_t>(n) + 1);
    std::copy(row.begin(), row.end(), out.begin());
    out[static_cast<std::size_t>(n)] = row[static_cast<std::size_t>(p)];
    out[static_cast<std::size_t>(p)] = static_cast<Symbol>(n);
    return out;
}

}  // namespace detail

/// Simple partition and extension: covered rows of each extending block are
/// transformed at their designated position, append blocks gain the new
/// symbol n at the end. The output is one PA on Z_{n+1} with hd >= d.
inline PermutationArray simple_extend(const PartitionSystem& sys, const ExtendOptions& opts = {}) {
    if (opts.validate_first) detail::throw_if_invalid(validate(sys, opts.vopts), "simple_extend");
    const int n = sys.n;
    PermutationArray out(n + 1);
    for (std::size_t i = 0; i < sys.blocks.size(); ++i) {
        const auto& blk = sys.blocks[i];
        if (sys.is_append_block(i)) {
            for (std::size_t r = 0; r < blk.num_rows(); ++r) {
                std::vector<Symbol> row(blk.row(r).begin(), blk.row(r).end());
                row.push_back(static_cast<Symbol>(n));
                out.append_raw(row);
            }
        } else {
            CoverageReport cov = covered(blk, sys.P[i], sys.Q[i]);
            for (std::size_t r = 0; r < blk.num_rows(); ++r) {
                if (cov.designated[r] < 0) continue;
                out.append_raw(detail::ext_at(blk.row(r), cov.designated[r], n));
            }
        }
    }
    return out;
}

struct SequentialResult {
    std::vector<PermutationArray> stage1;
    PermutationArray final_pa;

    std::vector<std::size_t> stage1_sizes() const {
        std::vector<std::size_t> v;
        v.reserve(stage1.size());
        for (const auto& a : stage1) v.push_back(a.num_rows());
        return v;
    }
};

/// Two rounds of simple extension: each input system is extended to Z_{n+1},
/// the extended arrays become the blocks of an outer system (outer_P/outer_Q
/// on Z_{n+1}, append markers allowed), and that system is extended again.
inline SequentialResult sequential_extend(const std::vector<PartitionSystem>& systems,
                                          const std::vector<std::vector<int>>& outer_P,
                                          const std::vector<std::vector<int>>& outer_Q,
                                          const ExtendOptions& opts = {}) {
    if (systems.empty()) throw std::invalid_argument("sequential_extend: no systems");
    const int n = systems.front().n;
    const int d = systems.front().d;
    for (const auto& s : systems)
        if (s.n != n || s.d != d) throw std::invalid_argument("sequential_extend: systems disagree on n or d");

    if (opts.validate_first) {
        // pairwise disjointness and the cross-distance precondition between systems
        std::vector<RowSet> sets;
        std::vector<const PermutationArray*> all_blocks;
        std::vector<std::size_t> owner;
        for (std::size_t s = 0; s < systems.size(); ++s)
            for (const auto& b : systems[s].blocks) {
                all_blocks.push_back(&b);
                owner.push_back(s);
                sets.emplace_back(b);
            }
        for (std::size_t i = 0; i < all_blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < all_blocks.size(); ++j) {
                if (owner[i] == owner[j]) continue;  // intra-system checks happen in validate()
                for (std::size_t r = 0; r < all_blocks[i]->num_rows(); ++r)
                    if (sets[j].contains(all_blocks[i]->row(r)))
                        throw std::invalid_argument("sequential_extend: systems share a row");
                std::uint64_t pairs = all_blocks[i]->num_rows() * all_blocks[j]->num_rows();
                if (pairs > 0 && pairs <= opts.vopts.full_pair_limit &&
                    cross_distance(*all_blocks[i], *all_blocks[j], opts.vopts.threads) < d - 1)
                    throw std::invalid_argument("sequential_extend: cross distance between systems below d-1");
            }
        }
    }

    SequentialResult res;
    res.stage1.reserve(systems.size());
    for (const auto& s : systems) res.stage1.push_back(simple_extend(s, opts));

    PartitionSystem outer;
    outer.n = n + 1;
    outer.d = d;
    outer.blocks = res.stage1;
    outer.P = outer_P;
    outer.Q = outer_Q;
    res.final_pa = simple_extend(outer, opts);
    return res;
}

/// SHIFT(gamma, t): the sequence (n, n+1, ..., n+r-1) rotated left t places.
inline std::vector<Symbol> shift_sequence(int n, int r, int t) {
    std::vector<Symbol> s(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) s[static_cast<std::size_t>(i)] = static_cast<Symbol>(n + (i + t) % r);
    return s;
}

/// Rudimentary parallel extension on 2r blocks. The first r blocks have
/// their leading r symbols replaced by SHIFT(gamma, l) with the displaced
/// symbols moved to the tail; the last r blocks append SHIFT(gamma, m).
inline PermutationArray parallel_rudimentary(const std::vector<PermutationArray>& blocks, int r, int d,
                                             const ExtendOptions& opts = {}) {
    if (r < 1) throw std::invalid_argument("parallel_rudimentary: r must be positive");
    if (blocks.size() != static_cast<std::size_t>(2 * r))
        throw std::invalid_argument("parallel_rudimentary: expected exactly 2r blocks");
    const int n = blocks.front().num_symbols();
    for (const auto& b : blocks)
        if (b.num_symbols() != n) throw std::invalid_argument("parallel_rudimentary: blocks disagree on n");
    if (r > n) throw std::invalid_argument("parallel_rudimentary: r exceeds n");

    if (opts.validate_first) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].num_rows() == 0) continue;
            if (min_distance(blocks[i], d, opts.vopts.threads).min_distance_found < d)
                throw std::invalid_argument("parallel_rudimentary: block " + std::to_string(i) +
                                            " has distance below d");
        }
        PermutationArray all(n);
        for (const auto& b : blocks) all.append_all(b);
        if (all.num_rows() > 1) {
            std::uint64_t pairs = all.num_rows() * all.num_rows() / 2;
            if (pairs <= opts.vopts.full_pair_limit &&
                min_distance(all, d - r, opts.vopts.threads).min_distance_found < d - r)
                throw std::invalid_argument("parallel_rudimentary: union distance below d-r");
        }
    }

    PermutationArray out(n + r);
    for (int l = 0; l < 2 * r; ++l) {
        const auto& blk = blocks[static_cast<std::size_t>(l)];
        std::vector<Symbol> seq = shift_sequence(n, r, l % r);
        for (std::size_t row = 0; row < blk.num_rows(); ++row) {
            auto src = blk.row(row);
            std::vector<Symbol> v;
            v.reserve(static_cast<std::size_t>(n + r));
            if (l < r) {
                v.insert(v.end(), seq.begin(), seq.end());
                v.insert(v.end(), src.begin() + r, src.end());
                v.insert(v.end(), src.begin(), src.begin() + r);  // displaced symbols, original order
            } else {
                v.insert(v.end(), src.begin(), src.end());
                v.insert(v.end(), seq.begin(), seq.end());
            }
            out.append_raw(v);
        }
    }
    return out;
}

/// Parallel extension by two symbols on a (d,2)-partition system. 2-covered
/// rows are rewritten at the designated pair; the first append block gains
/// (n, n+1), the second (n+1, n).
inline PermutationArray parallel_2ext(const PartitionSystem2& sys, const ExtendOptions& opts = {}) {
    if (opts.validate_first) detail::throw_if_invalid(validate(sys, opts.vopts), "parallel_2ext");
    const int n = sys.n;
    PermutationArray out(n + 2);
    int append_seen = 0;
    for (std::size_t i = 0; i < sys.blocks.size(); ++i) {
        const auto& blk = sys.blocks[i];
        if (sys.is_append_block(i)) {
            Symbol first = static_cast<Symbol>(append_seen == 0 ? n : n + 1);
            Symbol second = static_cast<Symbol>(append_seen == 0 ? n + 1 : n);
            ++append_seen;
            for (std::size_t r = 0; r < blk.num_rows(); ++r) {
                std::vector<Symbol> row(blk.row(r).begin(), blk.row(r).end());
                row.push_back(first);
                row.push_back(second);
                out.append_raw(row);
            }
        } else {
            CoverageReport2 cov = covered2(blk, sys.P[i], sys.Q[i], sys.R[i], sys.S[i]);
            for (std::size_t r = 0; r < blk.num_rows(); ++r) {
                auto [p, rr] = cov.designated[r];
                if (p < 0) continue;
                auto src = blk.row(r);
                std::vector<Symbol> v(static_cast<std::size_t>(n) + 2);
                std::copy(src.begin(), src.end(), v.begin());
                v[static_cast<std::size_t>(n)] = src[static_cast<std::size_t>(p)];
                v[static_cast<std::size_t>(n) + 1] = src[static_cast<std::size_t>(rr)];
                v[static_cast<std::size_t>(p)] = static_cast<Symbol>(n);
                v[static_cast<std::size_t>(rr)] = static_cast<Symbol>(n + 1);
                out.append_raw(v);
            }
        }
    }
    return out;
}

}  // namespace pex
