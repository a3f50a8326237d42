#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pex/perm_array.hpp"
#include "pex/verify.hpp"

namespace pex {

/// Blocks plus aligned position/symbol partitions. Entry i of P/Q either
/// names positions/symbols in Z_n (an extending block) or is an append
/// marker: an empty list, or {n} as written in partition tables ("cover by
/// placing the new symbol in the appended position").
struct PartitionSystem {
    int n = 0;
    int d = 0;
    std::vector<PermutationArray> blocks;
    std::vector<std::vector<int>> P, Q;

    bool is_append_block(std::size_t i) const {
        return P[i].empty() || *std::min_element(P[i].begin(), P[i].end()) >= n;
    }
};

/// The two-symbol variant: four aligned partitions, two trailing append
/// blocks (first appends (n, n+1), second (n+1, n)).
struct PartitionSystem2 {
    int n = 0;
    int d = 0;
    std::vector<PermutationArray> blocks;
    std::vector<std::vector<int>> P, Q, R, S;

    bool is_append_block(std::size_t i) const {
        return P[i].empty() || *std::min_element(P[i].begin(), P[i].end()) >= n;
    }
};

struct CoverageReport {
    // designated position per row, -1 where uncovered
    std::vector<int> designated;
    std::vector<std::size_t> uncovered;
    std::size_t covered_count = 0;
};

struct CoverageReport2 {
    std::vector<std::pair<int, int>> designated;  // (-1,-1) where uncovered
    std::vector<std::size_t> uncovered;
    std::size_t covered_count = 0;
};

/// covered(M_i) with the designated position chosen as the smallest p in P_i
/// holding a symbol of Q_i.
inline CoverageReport covered(const PermutationArray& block, const std::vector<int>& P_i,
                              const std::vector<int>& Q_i) {
    CoverageReport rep;
    rep.designated.assign(block.num_rows(), -1);
    std::vector<char> in_q(static_cast<std::size_t>(block.num_symbols()), 0);
    for (int s : Q_i)
        if (s >= 0 && s < block.num_symbols()) in_q[static_cast<std::size_t>(s)] = 1;
    std::vector<int> ps = P_i;
    std::sort(ps.begin(), ps.end());
    for (std::size_t r = 0; r < block.num_rows(); ++r) {
        auto row = block.row(r);
        for (int p : ps) {
            if (p < 0 || p >= block.num_symbols()) continue;
            if (in_q[row[static_cast<std::size_t>(p)]]) {
                rep.designated[r] = p;
                break;
            }
        }
        if (rep.designated[r] >= 0)
            ++rep.covered_count;
        else
            rep.uncovered.push_back(r);
    }
    return rep;
}

/// 2-covered(M_i) with the designated pair (p, r) chosen lexicographically
/// smallest among p in P_i, r in R_i, r != p, sigma(p) in Q_i, sigma(r) in S_i.
inline CoverageReport2 covered2(const PermutationArray& block, const std::vector<int>& P_i,
                                const std::vector<int>& Q_i, const std::vector<int>& R_i,
                                const std::vector<int>& S_i) {
    CoverageReport2 rep;
    rep.designated.assign(block.num_rows(), {-1, -1});
    auto mask = [&](const std::vector<int>& v) {
        std::vector<char> m(static_cast<std::size_t>(block.num_symbols()), 0);
        for (int s : v)
            if (s >= 0 && s < block.num_symbols()) m[static_cast<std::size_t>(s)] = 1;
        return m;
    };
    std::vector<char> in_q = mask(Q_i), in_s = mask(S_i);
    std::vector<int> ps = P_i, rs = R_i;
    std::sort(ps.begin(), ps.end());
    std::sort(rs.begin(), rs.end());
    for (std::size_t rr = 0; rr < block.num_rows(); ++rr) {
        auto row = block.row(rr);
        for (int p : ps) {
            if (p < 0 || p >= block.num_symbols() || !in_q[row[static_cast<std::size_t>(p)]]) continue;
            for (int r2 : rs) {
                if (r2 == p || r2 < 0 || r2 >= block.num_symbols()) continue;
                if (in_s[row[static_cast<std::size_t>(r2)]]) {
                    rep.designated[rr] = {p, r2};
                    break;
                }
            }
            if (rep.designated[rr].first >= 0) break;
        }
        if (rep.designated[rr].first >= 0)
            ++rep.covered_count;
        else
            rep.uncovered.push_back(rr);
    }
    return rep;
}

/// An optional certificate that block i equals reps[i] * group, letting the
/// validator replace quadratic distance scans with the coset shortcut.
struct CosetHint {
    const PermutationArray* group = nullptr;
    std::vector<Permutation> reps;
};

struct ValidateOptions {
    // blocks whose pairwise scan exceeds this pair count are not scanned in
    // full; the coset hint (when given) or a skip note covers them
    std::uint64_t full_pair_limit = 4'000'000;
    const CosetHint* hint = nullptr;
    int threads = 0;
};

struct ValidationReport {
    bool valid = true;
    std::string first_violation;  // empty when valid
    std::vector<std::string> skipped_checks;

    void fail(std::string why) {
        if (valid) {
            valid = false;
            first_violation = std::move(why);
        }
    }
};

namespace detail {

inline bool is_marker(const std::vector<int>& v, int n) {
    return v.empty() || *std::min_element(v.begin(), v.end()) >= n;
}

inline bool is_partition_of_zn(const std::vector<const std::vector<int>*>& sets, int n, std::string& why) {
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (const auto* s : sets) {
        for (int v : *s) {
            if (v < 0 || v >= n) {
                why = "value " + std::to_string(v) + " outside Z_" + std::to_string(n);
                return false;
            }
            if (++count[static_cast<std::size_t>(v)] > 1) {
                why = "value " + std::to_string(v) + " appears in two sets";
                return false;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (count[static_cast<std::size_t>(v)] == 0) {
            why = "value " + std::to_string(v) + " is uncovered";
            return false;
        }
    }
    return true;
}

// Property I/II checks shared by both system shapes. d_gap is 1 for simple
// systems (cross >= d-1) and 2 for (d,2)-systems (cross >= d-2).
template <typename System>
inline void check_distances(const System& sys, int d_gap, const ValidateOptions& opts,
                            ValidationReport& rep) {
    const auto& blocks = sys.blocks;
    const CosetHint* hint = opts.hint;
    if (hint && hint->reps.size() != blocks.size()) {
        rep.fail("coset hint size does not match block count");
        return;
    }

    int group_hd = -1;
    if (hint) {
        RowSet grows(*hint->group);
        for (std::size_t i = 0; i < blocks.size() && rep.valid; ++i) {
            if (blocks[i].num_rows() != hint->group->num_rows()) {
                rep.fail("block " + std::to_string(i) + " size differs from hinted group");
                return;
            }
            Permutation inv_rep = inverse(hint->reps[i]);
            for (std::size_t r = 0; r < blocks[i].num_rows(); ++r) {
                if (!grows.contains(compose(inv_rep, blocks[i].row_perm(r)).span())) {
                    rep.fail("block " + std::to_string(i) + " is not the hinted coset");
                    return;
                }
            }
        }
        group_hd = group_min_distance(*hint->group);
    }

    for (std::size_t i = 0; i < blocks.size() && rep.valid; ++i) {
        if (blocks[i].num_rows() == 0) continue;
        std::uint64_t pairs = blocks[i].num_rows() * blocks[i].num_rows() / 2;
        int hd;
        if (hint) {
            hd = group_hd;  // hd(rep G) = hd(G): left composition relabels symbols
        } else if (pairs <= opts.full_pair_limit) {
            hd = min_distance(blocks[i], sys.d, opts.threads).min_distance_found;
        } else {
            rep.skipped_checks.push_back("intra distance of block " + std::to_string(i) +
                                         " (too large, no coset hint)");
            continue;
        }
        if (hd < sys.d)
            rep.fail("block " + std::to_string(i) + " has distance " + std::to_string(hd) + " < d");
    }

    for (std::size_t i = 0; i < blocks.size() && rep.valid; ++i) {
        for (std::size_t j = i + 1; j < blocks.size() && rep.valid; ++j) {
            if (blocks[i].num_rows() == 0 || blocks[j].num_rows() == 0) continue;
            std::uint64_t pairs = blocks[i].num_rows() * blocks[j].num_rows();
            int hd;
            if (hint) {
                hd = coset_min_distance(*hint->group, hint->reps[i], hint->reps[j]);
            } else if (pairs <= opts.full_pair_limit) {
                hd = cross_distance(blocks[i], blocks[j], opts.threads);
            } else {
                rep.skipped_checks.push_back("cross distance of blocks " + std::to_string(i) + "," +
                                             std::to_string(j) + " (too large, no coset hint)");
                continue;
            }
            if (hd < sys.d - d_gap)
                rep.fail("blocks " + std::to_string(i) + "," + std::to_string(j) + " have distance " +
                         std::to_string(hd) + " < d-" + std::to_string(d_gap));
        }
    }
}

template <typename System>
inline void check_structure(const System& sys, int max_append, ValidationReport& rep) {
    if (sys.n < 1 || sys.n > kMaxSymbols) {
        rep.fail("bad n");
        return;
    }
    if (sys.blocks.size() != sys.P.size() || sys.blocks.size() != sys.Q.size()) {
        rep.fail("P/Q length does not match block count");
        return;
    }
    int appenders = 0;
    for (std::size_t i = 0; i < sys.blocks.size(); ++i) {
        if (sys.blocks[i].num_symbols() != sys.n && sys.blocks[i].num_rows() > 0) {
            rep.fail("block " + std::to_string(i) + " is not on Z_n");
            return;
        }
        if (sys.is_append_block(i)) ++appenders;
    }
    if (appenders > max_append) {
        rep.fail("too many append-only blocks (" + std::to_string(appenders) + ")");
        return;
    }
    // blocks pairwise row-disjoint
    std::vector<RowSet> sets;
    sets.reserve(sys.blocks.size());
    for (const auto& b : sys.blocks) sets.emplace_back(b);
    for (std::size_t i = 0; i < sys.blocks.size() && rep.valid; ++i) {
        for (std::size_t j = i + 1; j < sys.blocks.size() && rep.valid; ++j) {
            const auto& small = sys.blocks[i].num_rows() <= sys.blocks[j].num_rows() ? sys.blocks[i] : sys.blocks[j];
            const auto& big_set = sys.blocks[i].num_rows() <= sys.blocks[j].num_rows() ? sets[j] : sets[i];
            for (std::size_t r = 0; r < small.num_rows(); ++r) {
                if (big_set.contains(small.row(r))) {
                    rep.fail("blocks " + std::to_string(i) + "," + std::to_string(j) + " share a row");
                    break;
                }
            }
        }
    }
}

inline void check_partition_family(const std::vector<std::vector<int>>& fam,
                                   const std::vector<char>& append_mask, int n, const char* name,
                                   ValidationReport& rep) {
    std::vector<const std::vector<int>*> live;
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (!append_mask[i]) live.push_back(&fam[i]);
    if (live.empty()) return;  // s = 0: nothing to partition
    std::string why;
    if (!is_partition_of_zn(live, n, why)) rep.fail(std::string(name) + " is not a partition of Z_n: " + why);
}

}  // namespace detail

inline ValidationReport validate(const PartitionSystem& sys, const ValidateOptions& opts = {}) {
    ValidationReport rep;
    detail::check_structure(sys, 1, rep);
    if (!rep.valid) return rep;
    std::vector<char> append_mask(sys.blocks.size(), 0);
    for (std::size_t i = 0; i < sys.blocks.size(); ++i) append_mask[i] = sys.is_append_block(i) ? 1 : 0;
    for (std::size_t i = 0; i < sys.blocks.size(); ++i) {
        if (detail::is_marker(sys.Q[i], sys.n) != static_cast<bool>(append_mask[i])) {
            rep.fail("block " + std::to_string(i) + ": P and Q disagree about the append marker");
            return rep;
        }
    }
    detail::check_partition_family(sys.P, append_mask, sys.n, "P", rep);
    if (!rep.valid) return rep;
    detail::check_partition_family(sys.Q, append_mask, sys.n, "Q", rep);
    if (!rep.valid) return rep;
    detail::check_distances(sys, 1, opts, rep);
    return rep;
}

inline ValidationReport validate(const PartitionSystem2& sys, const ValidateOptions& opts = {}) {
    ValidationReport rep;
    detail::check_structure(sys, 2, rep);
    if (!rep.valid) return rep;
    if (sys.R.size() != sys.blocks.size() || sys.S.size() != sys.blocks.size()) {
        rep.fail("R/S length does not match block count");
        return rep;
    }
    std::vector<char> append_mask(sys.blocks.size(), 0);
    for (std::size_t i = 0; i < sys.blocks.size(); ++i) append_mask[i] = sys.is_append_block(i) ? 1 : 0;
    for (std::size_t i = 0; i < sys.blocks.size(); ++i) {
        bool m = static_cast<bool>(append_mask[i]);
        if (detail::is_marker(sys.Q[i], sys.n) != m || detail::is_marker(sys.R[i], sys.n) != m ||
            detail::is_marker(sys.S[i], sys.n) != m) {
            rep.fail("block " + std::to_string(i) + ": partition entries disagree about the append marker");
            return rep;
        }
    }
    detail::check_partition_family(sys.P, append_mask, sys.n, "P", rep);
    if (!rep.valid) return rep;
    detail::check_partition_family(sys.Q, append_mask, sys.n, "Q", rep);
    if (!rep.valid) return rep;
    detail::check_partition_family(sys.R, append_mask, sys.n, "R", rep);
    if (!rep.valid) return rep;
    detail::check_partition_family(sys.S, append_mask, sys.n, "S", rep);
    if (!rep.valid) return rep;
    for (std::size_t i = 0; i < sys.blocks.size(); ++i) {
        if (append_mask[i]) continue;
        std::set<int> p(sys.P[i].begin(), sys.P[i].end());
        for (int v : sys.R[i])
            if (p.count(v)) rep.fail("P_" + std::to_string(i) + " and R_" + std::to_string(i) + " intersect");
        std::set<int> q(sys.Q[i].begin(), sys.Q[i].end());
        for (int v : sys.S[i])
            if (q.count(v)) rep.fail("Q_" + std::to_string(i) + " and S_" + std::to_string(i) + " intersect");
        if (!rep.valid) return rep;
    }
    detail::check_distances(sys, 2, opts, rep);
    return rep;
}

}  // namespace pex
