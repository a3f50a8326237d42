#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "pex/groups.hpp"
#include "pex/ilp.hpp"
#include "pex/partition.hpp"
#include "pex/perm_array.hpp"
#include "pex/prng.hpp"
#include "pex/verify.hpp"

namespace pex {

struct SearchConfig {
    std::uint64_t seed = 0;
    std::uint64_t trial_budget = 1000;
    double time_budget_s = 60.0;
    enum class Solver { builtin, export_only };
    Solver solver = Solver::builtin;

    void check() const {
        if (trial_budget == 0 || time_budget_s <= 0) throw std::invalid_argument("SearchConfig: budgets must be positive");
    }
};

/// The fixed symbol classes Q_1 = {0..k-1}, ..., Q_k = {k^2-k..k^2-1}.
/// Symbols >= k^2 stay unassigned here; pad_partition distributes them when
/// a full partition of Z_n is required.
inline std::vector<std::vector<int>> default_symbol_classes(int n, int k) {
    if (k < 1 || k * k > n) throw std::invalid_argument("default_symbol_classes: need k^2 <= n");
    std::vector<std::vector<int>> q(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) q[static_cast<std::size_t>(i)].push_back(i * k + j);
    return q;
}

/// Adds every value of Z_n missing from the classes to the last class.
inline std::vector<std::vector<int>> pad_partition(std::vector<std::vector<int>> classes, int n) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& c : classes)
        for (int v : c)
            if (v >= 0 && v < n) seen[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)]) classes.back().push_back(v);
    return classes;
}

/// k contiguous runs of near-equal size; the baseline partition that greedy
/// search is measured against.
inline std::vector<std::vector<int>> contiguous_partition(int n, int k) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
    int base = n / k, extra = n % k, v = 0;
    for (int i = 0; i < k; ++i) {
        int len = base + (i < extra ? 1 : 0);
        for (int j = 0; j < len; ++j) out[static_cast<std::size_t>(i)].push_back(v++);
    }
    return out;
}

/// Partition families derived by cyclic shifts: family member i assigns to
/// class j the base class (i+j) mod k.
inline std::vector<std::vector<std::vector<int>>> rotated_partitions(const std::vector<std::vector<int>>& base) {
    const std::size_t k = base.size();
    std::vector<std::vector<std::vector<int>>> fam(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) fam[i].push_back(base[(i + j) % k]);
    return fam;
}

/// Greedy position-partition construction: every position, in ascending
/// order, goes to the block where it newly covers the most not-yet-covered
/// rows (ties to the smallest block index). The result is always a
/// partition of Z_n.
inline std::vector<std::vector<int>> greedy_partition(const std::vector<PermutationArray>& blocks,
                                                      const std::vector<std::vector<int>>& q,
                                                      const SearchConfig& cfg = {}) {
    cfg.check();
    const int k = static_cast<int>(blocks.size());
    if (k == 0 || q.size() != blocks.size()) throw std::invalid_argument("greedy_partition: |Q| must equal block count");
    const int n = blocks.front().num_symbols();
    if (k > n) throw std::invalid_argument("greedy_partition: more blocks than positions");

    std::vector<std::vector<char>> in_q(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        in_q[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n), 0);
        for (int s : q[static_cast<std::size_t>(i)])
            if (s >= 0 && s < n) in_q[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = 1;
    }

    std::vector<std::vector<char>> covered_rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) covered_rows[static_cast<std::size_t>(i)].assign(blocks[static_cast<std::size_t>(i)].num_rows(), 0);

    std::vector<std::vector<int>> p(static_cast<std::size_t>(k));
    for (int r = 0; r < n; ++r) {
        int best_i = 0;
        std::size_t best_gain = 0;
        bool first = true;
        for (int i = 0; i < k; ++i) {
            const auto& blk = blocks[static_cast<std::size_t>(i)];
            std::size_t gain = 0;
            for (std::size_t row = 0; row < blk.num_rows(); ++row) {
                if (covered_rows[static_cast<std::size_t>(i)][row]) continue;
                if (in_q[static_cast<std::size_t>(i)][blk.row(row)[static_cast<std::size_t>(r)]]) ++gain;
            }
            if (first || gain > best_gain) {
                best_gain = gain;
                best_i = i;
                first = false;
            }
        }
        p[static_cast<std::size_t>(best_i)].push_back(r);
        const auto& blk = blocks[static_cast<std::size_t>(best_i)];
        for (std::size_t row = 0; row < blk.num_rows(); ++row) {
            if (!covered_rows[static_cast<std::size_t>(best_i)][row] &&
                in_q[static_cast<std::size_t>(best_i)][blk.row(row)[static_cast<std::size_t>(r)]])
                covered_rows[static_cast<std::size_t>(best_i)][row] = 1;
        }
    }
    return p;
}

inline std::size_t coverage_of(const std::vector<PermutationArray>& blocks,
                               const std::vector<std::vector<int>>& p,
                               const std::vector<std::vector<int>>& q) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        total += covered(blocks[i], p[i], q[i]).covered_count;
    return total;
}

/// ILP encoding of position-partition selection: binary b_{i,p} assigns
/// position p to block i, binary c_{i,j} marks row j of block i covered.
/// Maximizes total coverage subject to each position lying in exactly one
/// block, coverage being supported by an assigned position holding a Q_i
/// symbol, and all n positions being assigned.
inline IlpModel ilp_partition_model(const std::vector<PermutationArray>& blocks,
                                    const std::vector<std::vector<int>>& q) {
    if (blocks.empty() || q.size() != blocks.size())
        throw std::invalid_argument("ilp_partition_model: |Q| must equal block count");
    const int k = static_cast<int>(blocks.size());
    const int n = blocks.front().num_symbols();

    IlpModel m;
    std::vector<std::vector<int>> bvar(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < n; ++p)
            bvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] =
                m.add_var("b" + std::to_string(i) + "_" + std::to_string(p));

    std::vector<std::vector<char>> in_q(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        in_q[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n), 0);
        for (int s : q[static_cast<std::size_t>(i)])
            if (s >= 0 && s < n) in_q[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = 1;
    }

    for (int i = 0; i < k; ++i) {
        const auto& blk = blocks[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < blk.num_rows(); ++j) {
            int cij = m.add_var("c" + std::to_string(i) + "_" + std::to_string(j));
            m.objective.push_back({1, cij});
            // coverage support: sum over positions p with sigma[p] in Q_i of b_{i,p} >= c_{i,j}
            std::vector<IlpModel::Term> terms;
            auto row = blk.row(j);
            for (int p = 0; p < n; ++p)
                if (in_q[static_cast<std::size_t>(i)][row[static_cast<std::size_t>(p)]])
                    terms.push_back({1, bvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)]});
            terms.push_back({-1, cij});
            m.add_constraint("cov" + std::to_string(i) + "_" + std::to_string(j), std::move(terms),
                             IlpModel::Cmp::ge, 0);
        }
    }

    for (int p = 0; p < n; ++p) {
        std::vector<IlpModel::Term> terms;
        for (int i = 0; i < k; ++i) terms.push_back({1, bvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)]});
        m.add_constraint("one" + std::to_string(p), std::move(terms), IlpModel::Cmp::eq, 1);
    }
    {
        std::vector<IlpModel::Term> terms;
        for (int i = 0; i < k; ++i)
            for (int p = 0; p < n; ++p) terms.push_back({1, bvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)]});
        m.add_constraint("all_assigned", std::move(terms), IlpModel::Cmp::eq, n);
    }
    return m;
}

/// Decodes b_{i,p} from a solved partition model back into P.
inline std::vector<std::vector<int>> decode_partition(const IlpModel& m, const std::vector<std::uint8_t>& assignment,
                                                      int k, int n) {
    std::vector<std::vector<int>> p(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int pos = 0; pos < n; ++pos) {
            int v = m.var("b" + std::to_string(i) + "_" + std::to_string(pos));
            if (assignment[static_cast<std::size_t>(v)]) p[static_cast<std::size_t>(i)].push_back(pos);
        }
    return p;
}

/// ILP encoding of coset-representative search: x_{i,j} means pi(i) = j.
/// Row/column assignment equalities force a permutation; one constraint per
/// group row limits agreements to n - d_target.
inline IlpModel ilp_coset_model(const PermutationArray& g, int d_target) {
    const int n = g.num_symbols();
    IlpModel m;
    std::vector<std::vector<int>> xvar(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            xvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m.add_var("x" + std::to_string(i) + "_" + std::to_string(j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.objective.push_back({1, xvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});

    for (int i = 0; i < n; ++i) {
        std::vector<IlpModel::Term> terms;
        for (int j = 0; j < n; ++j) terms.push_back({1, xvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
        m.add_constraint("row" + std::to_string(i), std::move(terms), IlpModel::Cmp::eq, 1);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<IlpModel::Term> terms;
        for (int i = 0; i < n; ++i) terms.push_back({1, xvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
        m.add_constraint("col" + std::to_string(j), std::move(terms), IlpModel::Cmp::eq, 1);
    }
    for (std::size_t s = 0; s < g.num_rows(); ++s) {
        auto sigma = g.row(s);
        std::vector<IlpModel::Term> terms;
        for (int i = 0; i < n; ++i) terms.push_back({1, xvar[static_cast<std::size_t>(i)][sigma[static_cast<std::size_t>(i)]]});
        m.add_constraint("agree" + std::to_string(s), std::move(terms), IlpModel::Cmp::le, n - d_target);
    }
    return m;
}

/// Decodes x_{i,j} back to a permutation; throws if the assignment is not
/// a permutation matrix.
inline Permutation decode_coset_solution(const IlpModel& m, const std::vector<std::uint8_t>& assignment, int n) {
    std::vector<Symbol> v(static_cast<std::size_t>(n), static_cast<Symbol>(0));
    for (int i = 0; i < n; ++i) {
        int found = -1;
        for (int j = 0; j < n; ++j) {
            if (assignment[static_cast<std::size_t>(m.var("x" + std::to_string(i) + "_" + std::to_string(j)))]) {
                if (found >= 0) throw std::runtime_error("decode_coset_solution: two symbols in one position");
                found = j;
            }
        }
        if (found < 0) throw std::runtime_error("decode_coset_solution: empty position");
        v[static_cast<std::size_t>(i)] = static_cast<Symbol>(found);
    }
    return Permutation(std::move(v));
}

/// Random search for coset representatives at distance >= d_target from G
/// and from each other. Trials draw uniform permutations from seeds
/// seed+trial, so results are reproducible and mergeable.
inline std::vector<Permutation> random_coset_search(const GroupPA& g, int d_target,
                                                    const std::vector<Permutation>& existing,
                                                    const SearchConfig& cfg) {
    cfg.check();
    const int n = g.base.num_symbols();
    if (d_target > group_min_distance(g.base))
        throw std::invalid_argument("random_coset_search: d_target exceeds hd(G)");
    std::vector<Permutation> found;
    auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(cfg.time_budget_s);
    for (std::uint64_t trial = 0; trial < cfg.trial_budget; ++trial) {
        if (std::chrono::steady_clock::now() > deadline) break;
        SplitMix64 rng(cfg.seed + trial);
        Permutation cand = random_permutation(n, rng);
        if (coset_min_distance(g.base, Permutation::identity(n), cand) < d_target) continue;
        bool ok = true;
        for (const auto& prev : existing)
            if (coset_min_distance(g.base, prev, cand) < d_target) {
                ok = false;
                break;
            }
        for (const auto& prev : found)
            if (ok && coset_min_distance(g.base, prev, cand) < d_target) ok = false;
        if (ok) found.push_back(std::move(cand));
    }
    return found;
}

}  // namespace pex
