#pragma once

#include <string>
#include <vector>

#include "pex/gf.hpp"
#include "pex/perm_array.hpp"

namespace pex {

struct LatinSquare {
    int m = 0;
    std::vector<Symbol> cells;  // row-major

    Symbol at(int i, int j) const {
        return cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)];
    }
    Symbol& at(int i, int j) {
        return cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)];
    }

    bool is_valid() const {
        if (m < 1 || cells.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) return false;
        std::vector<char> seen(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int j = 0; j < m; ++j) {
                Symbol s = at(i, j);
                if (s >= m || seen[s]) return false;
                seen[s] = 1;
            }
        }
        for (int j = 0; j < m; ++j) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int i = 0; i < m; ++i) {
                Symbol s = at(i, j);
                if (s >= m || seen[s]) return false;
                seen[s] = 1;
            }
        }
        return true;
    }
};

struct MolsSet {
    int m = 0;
    std::vector<LatinSquare> squares;

    /// Pairwise orthogonality: superimposing two squares yields every
    /// ordered symbol pair exactly once.
    bool is_orthogonal() const {
        for (std::size_t a = 0; a < squares.size(); ++a) {
            if (!squares[a].is_valid() || squares[a].m != m) return false;
            for (std::size_t b = a + 1; b < squares.size(); ++b) {
                std::vector<char> seen(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
                for (int i = 0; i < m; ++i) {
                    for (int j = 0; j < m; ++j) {
                        std::size_t key = static_cast<std::size_t>(squares[a].at(i, j)) * static_cast<std::size_t>(m) +
                                          squares[b].at(i, j);
                        if (seen[key]) return false;
                        seen[key] = 1;
                    }
                }
            }
        }
        return true;
    }
};

/// The classical GF(q) family: L_a[i][j] = a*i + j for each nonzero a,
/// giving q-1 pairwise orthogonal squares.
inline MolsSet mols_prime_power(int q) {
    FieldTable f = make_field(q);
    MolsSet set;
    set.m = q;
    set.squares.reserve(static_cast<std::size_t>(q - 1));
    for (int a = 1; a < q; ++a) {
        LatinSquare L;
        L.m = q;
        L.cells.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) L.at(i, j) = static_cast<Symbol>(f.add(f.mul(a, i), j));
        set.squares.push_back(std::move(L));
    }
    return set;
}

/// Latin square to PA block: the triple (i, j, k) of L becomes (k, j, i),
/// i.e. row k holds, at column j, the row index i with L[i][j] = k. The m
/// rows are pairwise at distance m.
inline PermutationArray latin_to_pa(const LatinSquare& L) {
    if (!L.is_valid()) throw std::invalid_argument("latin_to_pa: not a Latin square");
    const int m = L.m;
    PermutationArray out(m);
    std::vector<Symbol> rows(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Symbol k = L.at(i, j);
            rows[static_cast<std::size_t>(k) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
                static_cast<Symbol>(i);
        }
    for (int k = 0; k < m; ++k) {
        std::vector<Symbol> r(rows.begin() + static_cast<std::ptrdiff_t>(k) * m,
                              rows.begin() + static_cast<std::ptrdiff_t>(k + 1) * m);
        out.append_raw(r);
    }
    return out;
}

}  // namespace pex
