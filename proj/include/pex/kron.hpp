#pragma once

#include <string>
#include <vector>

#include "pex/extend.hpp"
#include "pex/latin.hpp"
#include "pex/partition.hpp"
#include "pex/perm_array.hpp"

namespace pex {

/// Modified Kronecker product: for each row alpha of X and beta of Y the
/// output row on lm symbols is the concatenation over j of the offset copy
/// (m*alpha(j) + beta(0), ..., m*alpha(j) + beta(m-1)). Rows are ordered
/// with the X row outermost.
inline PermutationArray kronecker(const PermutationArray& x, const PermutationArray& y) {
    const int l = x.num_symbols();
    const int m = y.num_symbols();
    PermutationArray out(l * m);
    out.reserve_rows(x.num_rows() * y.num_rows());
    std::vector<Symbol> v(static_cast<std::size_t>(l) * static_cast<std::size_t>(m));
    for (std::size_t xi = 0; xi < x.num_rows(); ++xi) {
        auto alpha = x.row(xi);
        for (std::size_t yi = 0; yi < y.num_rows(); ++yi) {
            auto beta = y.row(yi);
            std::size_t pos = 0;
            for (int j = 0; j < l; ++j) {
                int offset = m * alpha[static_cast<std::size_t>(j)];
                for (int u = 0; u < m; ++u) v[pos++] = static_cast<Symbol>(offset + beta[static_cast<std::size_t>(u)]);
            }
            out.append_raw(v);
        }
    }
    return out;
}

struct BlockwiseProduct {
    PermutationArray pa;
    std::vector<std::size_t> block_row_counts;
    int l = 0, m = 0;
    int a = 0, b = 0;  // measured defects: hd(union A) = l-a, hd(union B) = m-b

    /// lm - ab, the distance the product family attains.
    int expected_min_distance() const { return l * m - a * b; }
};

/// Union over i of A_blocks[i] (x) B_blocks[i]. The block families' distance
/// parameters are measured from the inputs, not assumed, so callers can
/// compare the measured product distance against expected_min_distance().
inline BlockwiseProduct kron_blockwise(const std::vector<PermutationArray>& a_blocks,
                                       const std::vector<PermutationArray>& b_blocks, int threads = 0) {
    if (a_blocks.size() != b_blocks.size() || a_blocks.empty())
        throw std::invalid_argument("kron_blockwise: block counts differ or empty");
    const int l = a_blocks.front().num_symbols();
    const int m = b_blocks.front().num_symbols();

    auto union_defect = [&](const std::vector<PermutationArray>& blocks, int n, const char* side) {
        PermutationArray all(n);
        for (const auto& blk : blocks) {
            if (blk.num_symbols() != n) throw std::invalid_argument("kron_blockwise: inconsistent block width");
            if (min_distance(blk, std::nullopt, threads).min_distance_found != n)
                throw std::invalid_argument(std::string("kron_blockwise: ") + side +
                                            " block is not full (intra distance < n)");
            all.append_all(blk);
        }
        return n - min_distance(all, std::nullopt, threads).min_distance_found;
    };

    BlockwiseProduct res;
    res.l = l;
    res.m = m;
    res.a = union_defect(a_blocks, l, "left");
    res.b = union_defect(b_blocks, m, "right");
    res.pa = PermutationArray(l * m);
    for (std::size_t i = 0; i < a_blocks.size(); ++i) {
        PermutationArray mi = kronecker(a_blocks[i], b_blocks[i]);
        res.block_row_counts.push_back(mi.num_rows());
        res.pa.append_all(mi);
    }
    return res;
}

struct ExtendBoundResult {
    PermutationArray pa;  // on lm+1 symbols, hd >= lm
    long long bound = 0;  // k*l*m rows, every product row covered
};

/// Kronecker product of full block families followed by simple extension.
/// Block i is covered through positions P_i = {(i-1) + j*m} and symbols
/// Q_i = [(i-1)m, im); leftovers go to the last class so P and Q partition
/// Z_lm. Full coverage is a theorem for bijective X rows, so a shortfall is
/// an input error, not a smaller output.
inline ExtendBoundResult kron_extend_bound(const std::vector<PermutationArray>& a_blocks,
                                           const std::vector<PermutationArray>& b_blocks,
                                           const ExtendOptions& opts = {}) {
    const std::size_t k = std::min(a_blocks.size(), b_blocks.size());
    if (k == 0) throw std::invalid_argument("kron_extend_bound: no blocks");
    std::vector<PermutationArray> as(a_blocks.begin(), a_blocks.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<PermutationArray> bs(b_blocks.begin(), b_blocks.begin() + static_cast<std::ptrdiff_t>(k));
    const int l = as.front().num_symbols();
    const int m = bs.front().num_symbols();
    const int n = l * m;
    if (static_cast<int>(k) > l || static_cast<int>(k) > m)
        throw std::invalid_argument("kron_extend_bound: more blocks than symbols on a side");

    PartitionSystem sys;
    sys.n = n;
    sys.d = n;
    std::size_t covered_target = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sys.blocks.push_back(kronecker(as[i], bs[i]));
        covered_target += sys.blocks.back().num_rows();
        int c = static_cast<int>(i);  // class index i-1 in 1-based terms
        std::vector<int> pi, qi;
        for (int j = 0; j < l; ++j) pi.push_back(j * m + c);
        for (int u = 0; u < m; ++u) qi.push_back(c * m + u);
        sys.P.push_back(std::move(pi));
        sys.Q.push_back(std::move(qi));
    }
    // leftovers keep P and Q partitions of Z_n
    for (int p = 0; p < n; ++p)
        if (p % m >= static_cast<int>(k)) sys.P.back().push_back(p);
    for (int s = static_cast<int>(k) * m; s < n; ++s) sys.Q.back().push_back(s);

    // every row must be covered before extension
    std::size_t covered_total = 0;
    for (std::size_t i = 0; i < k; ++i) covered_total += covered(sys.blocks[i], sys.P[i], sys.Q[i]).covered_count;
    if (covered_total != covered_target)
        throw std::invalid_argument("kron_extend_bound: coverage shortfall (" + std::to_string(covered_total) +
                                    " of " + std::to_string(covered_target) + " rows); malformed input blocks");

    ExtendBoundResult res;
    res.pa = simple_extend(sys, opts);
    res.bound = static_cast<long long>(res.pa.num_rows());
    return res;
}

/// The MOLS route: transform min(|mols_n|, |mols_m|) squares from each set
/// into full PA blocks and extend their Kronecker products, witnessing
/// M(nm+1, nm) >= k*n*m.
inline ExtendBoundResult kron_mols_bound(const MolsSet& mols_n, const MolsSet& mols_m,
                                         const ExtendOptions& opts = {}) {
    const std::size_t k = std::min(mols_n.squares.size(), mols_m.squares.size());
    if (k == 0) throw std::invalid_argument("kron_mols_bound: empty MOLS set");
    std::vector<PermutationArray> as, bs;
    for (std::size_t i = 0; i < k; ++i) {
        as.push_back(latin_to_pa(mols_n.squares[i]));
        bs.push_back(latin_to_pa(mols_m.squares[i]));
    }
    return kron_extend_bound(as, bs, opts);
}

}  // namespace pex
