#pragma once

#include <unordered_map>
#include <string>
#include <vector>

#include "pex/distance.hpp"
#include "pex/gf.hpp"
#include "pex/perm_array.hpp"
#include "pex/permutation.hpp"

namespace pex {

enum class GroupFamily { agl1, pgl2, pgammal2, cyclic_subgroup, explicit_pa };

inline const char* to_string(GroupFamily f) {
    switch (f) {
        case GroupFamily::agl1: return "agl1";
        case GroupFamily::pgl2: return "pgl2";
        case GroupFamily::pgammal2: return "pgammal2";
        case GroupFamily::cyclic_subgroup: return "cyclic";
        case GroupFamily::explicit_pa: return "explicit";
    }
    return "?";
}

struct GroupPA {
    PermutationArray base;
    GroupFamily family = GroupFamily::explicit_pa;
    int q = 0;
    // generator parameters per row: (a,b) for agl1, (a,b,c,d) for pgl2,
    // (a,b,c,d,j) for pgammal2
    std::vector<std::vector<int>> element_labels;
};

/// AGL(1,q): x -> ax + b over GF(q), a != 0. Rows are ordered by (a,b) with
/// a running through the nonzero field elements in encoding order and b
/// ascending, so coset blocks are contiguous.
inline GroupPA agl1(int q) {
    FieldTable f = make_field(q);
    GroupPA g;
    g.family = GroupFamily::agl1;
    g.q = q;
    g.base = PermutationArray(q);
    g.base.reserve_rows(static_cast<std::size_t>(q) * static_cast<std::size_t>(q - 1));
    for (int a = 1; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            std::vector<Symbol> row(static_cast<std::size_t>(q));
            for (int x = 0; x < q; ++x) row[static_cast<std::size_t>(x)] = static_cast<Symbol>(f.add(f.mul(a, x), b));
            g.base.append_raw(row);
            g.element_labels.push_back({a, b});
        }
    }
    return g;
}

namespace detail {

// x -> (ax+b)/(cx+d) on GF(q) together with the point at infinity, which is
// encoded as the extra symbol q in the last position.
inline std::vector<Symbol> moebius_row(const FieldTable& f, int a, int b, int c, int d, int frob_j) {
    const int q = f.q;
    std::vector<Symbol> row(static_cast<std::size_t>(q) + 1);
    for (int x = 0; x <= q; ++x) {
        int y;
        if (x == q) {  // the point at infinity
            y = (c == 0) ? q : f.mul(a, f.inv(c));
        } else {
            int xx = frob_j <= 0 ? x : f.frobenius(x, frob_j);
            int denom = f.add(f.mul(c, xx), d);
            if (denom == 0) {
                y = q;
            } else {
                y = f.mul(f.add(f.mul(a, xx), b), f.inv(denom));
            }
        }
        row[static_cast<std::size_t>(x)] = static_cast<Symbol>(y);
    }
    return row;
}

inline void append_pgl_rows(GroupPA& g, const FieldTable& f, int frob_j) {
    const int q = f.q;
    // canonical matrix representatives: first nonzero entry of (a,b,c,d) is 1
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            for (int c = 0; c < q; ++c) {
                for (int d = 0; d < q; ++d) {
                    int first = a != 0 ? a : (b != 0 ? b : (c != 0 ? c : d));
                    if (first != 1) continue;
                    if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
                    g.base.append_raw(moebius_row(f, a, b, c, d, frob_j));
                    g.element_labels.push_back(frob_j < 0 ? std::vector<int>{a, b, c, d}
                                                          : std::vector<int>{a, b, c, d, frob_j});
                }
            }
        }
    }
}

}  // namespace detail

/// PGL(2,q) acting on GF(q) plus infinity: (q+1)q(q-1) permutations of Z_{q+1}.
inline GroupPA pgl2(int q) {
    FieldTable f = make_field(q);
    GroupPA g;
    g.family = GroupFamily::pgl2;
    g.q = q;
    g.base = PermutationArray(q + 1);
    g.base.reserve_rows(static_cast<std::size_t>(q + 1) * static_cast<std::size_t>(q) * static_cast<std::size_t>(q - 1));
    detail::append_pgl_rows(g, f, -1);
    return g;
}

/// PGammaL(2,p^k): PGL(2,q) elements composed with each Frobenius power,
/// k (q+1)q(q-1) permutations in total.
inline GroupPA pgammal2(int q) {
    FieldTable f = make_field(q);
    GroupPA g;
    g.family = GroupFamily::pgammal2;
    g.q = q;
    g.base = PermutationArray(q + 1);
    for (int j = 0; j < f.k; ++j) detail::append_pgl_rows(g, f, j);
    return g;
}

/// The q-1 Latin-square blocks of AGL(1,q): C_i = {ix + b | b}, i nonzero in
/// encoding order. C_1 is the cyclic subgroup of translations.
inline std::vector<PermutationArray> cyclic_coset_decomposition(const GroupPA& g) {
    if (g.family != GroupFamily::agl1)
        throw std::invalid_argument("cyclic_coset_decomposition: expected an agl1 group");
    const int q = g.q;
    std::vector<PermutationArray> blocks;
    blocks.reserve(static_cast<std::size_t>(q - 1));
    for (int a = 1; a < q; ++a) {
        PermutationArray blk(q);
        blk.reserve_rows(static_cast<std::size_t>(q));
        for (int b = 0; b < q; ++b)
            blk.append(g.base.row(static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(q) +
                                  static_cast<std::size_t>(b)));
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

namespace detail {

// Cosets of a regular cyclic subgroup. An element whose non-identity powers
// are all fixed-point-free generates one; PGL(2,q) always contains such an
// element of order q+1.
inline std::vector<PermutationArray> regular_subgroup_cosets(const PermutationArray& base) {
    const int n = base.num_symbols();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < base.num_rows(); ++i) {
        auto r = base.row(i);
        index.emplace(std::string(reinterpret_cast<const char*>(r.data()), r.size() * sizeof(Symbol)), i);
    }
    auto key_of = [&](const Permutation& p) {
        return std::string(reinterpret_cast<const char*>(p.vec().data()), p.vec().size() * sizeof(Symbol));
    };

    Permutation id = Permutation::identity(n);
    for (std::size_t cand = 0; cand < base.num_rows(); ++cand) {
        std::vector<Permutation> subgroup{id};
        Permutation g = base.row_perm(cand);
        Permutation cur = g;
        bool ok = true;
        while (!(cur == id)) {
            if (count_fixed_points(cur.span()) != 0 || subgroup.size() > static_cast<std::size_t>(n)) {
                ok = false;
                break;
            }
            subgroup.push_back(cur);
            cur = compose(cur, g);
        }
        if (!ok || subgroup.size() != static_cast<std::size_t>(n)) continue;

        std::vector<char> used(base.num_rows(), 0);
        std::vector<PermutationArray> blocks;
        for (std::size_t i = 0; i < base.num_rows(); ++i) {
            if (used[i]) continue;
            PermutationArray blk(n);
            Permutation rep = base.row_perm(i);
            bool good = true;
            for (const auto& t : subgroup) {
                Permutation member = compose(rep, t);
                auto it = index.find(key_of(member));
                if (it == index.end() || used[it->second]) {
                    good = false;
                    break;
                }
                used[it->second] = 1;
                blk.append(member);
            }
            if (!good) return {};  // not a subgroup after all
            blocks.push_back(std::move(blk));
        }
        return blocks;
    }
    return {};
}

}  // namespace detail

/// Partition of the rows into full blocks of size n with intra-block
/// distance exactly n. AGL(1,q) uses its cyclic blocks; PGL(2,q) uses the
/// cosets of a regular cyclic subgroup when one is found, then falls back
/// to a greedy first-fit clique build. Failure is an error, never silent.
inline std::vector<PermutationArray> block_decomposition(const GroupPA& g) {
    if (g.family == GroupFamily::agl1) return cyclic_coset_decomposition(g);
    if (g.family != GroupFamily::pgl2)
        throw std::invalid_argument("block_decomposition: unsupported group family");

    auto torus = detail::regular_subgroup_cosets(g.base);
    if (!torus.empty()) return torus;

    const int n = g.base.num_symbols();
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < g.base.num_rows(); ++i) {
        auto ri = g.base.row(i);
        bool placed = false;
        for (auto& blk : blocks) {
            if (blk.size() == static_cast<std::size_t>(n)) continue;
            bool ok = true;
            for (std::size_t j : blk) {
                if (detail::agreements(ri.data(), g.base.row(j).data(), n) != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                blk.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) blocks.push_back({i});
    }
    for (const auto& blk : blocks) {
        if (blk.size() != static_cast<std::size_t>(n))
            throw std::runtime_error("block_decomposition: greedy clique partition failed (block of size " +
                                     std::to_string(blk.size()) + ")");
    }
    std::vector<PermutationArray> out;
    out.reserve(blocks.size());
    for (const auto& blk : blocks) {
        PermutationArray pa(n);
        pa.reserve_rows(blk.size());
        for (std::size_t i : blk) pa.append(g.base.row(i));
        out.push_back(std::move(pa));
    }
    return out;
}

}  // namespace pex
