#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pex/permutation.hpp"

namespace pex {

/// Table-backed arithmetic over GF(p^k), q <= 1024. Elements are encoded as
/// integers 0..q-1 whose base-p digits are the polynomial coefficients
/// (least significant digit = constant term). Tables are precomputed so the
/// generator loops run in constant time per operation.
class FieldTable {
public:
    int p = 0, k = 0, q = 0;
    std::vector<int> modulus;  // k+1 coefficients, constant term first, leading 1

    static std::optional<std::pair<int, int>> prime_power_split(int q) {
        if (q < 2) return std::nullopt;
        int p = smallest_prime_factor(q);
        int v = q, k = 0;
        while (v % p == 0) {
            v /= p;
            ++k;
        }
        if (v != 1) return std::nullopt;
        return std::make_pair(p, k);
    }

    static FieldTable make(int q) {
        if (q > kMaxSymbols) throw std::invalid_argument("make_field: q exceeds supported range");
        auto split = prime_power_split(q);
        if (!split) throw std::invalid_argument("make_field: " + std::to_string(q) + " is not a prime power");
        FieldTable f;
        f.p = split->first;
        f.k = split->second;
        f.q = q;
        f.modulus = smallest_irreducible(f.p, f.k);
        f.build_tables();
        return f;
    }

    int add(int a, int b) const { return add_tab_[idx(a, b)]; }
    int sub(int a, int b) const { return add(a, neg_tab_[static_cast<std::size_t>(b)]); }
    int neg(int a) const { return neg_tab_[static_cast<std::size_t>(a)]; }
    int mul(int a, int b) const { return mul_tab_[idx(a, b)]; }

    int inv(int a) const {
        if (a == 0) throw std::invalid_argument("field_inv: zero has no inverse");
        return inv_tab_[static_cast<std::size_t>(a)];
    }

    int pow(int a, long long e) const {
        if (e == 0) return 1;
        int acc = 1, base = a;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    /// x -> x^(p^j), the j-th power of the Frobenius automorphism.
    int frobenius(int a, int j) const {
        if (j < 0 || j >= k) throw std::invalid_argument("frobenius: exponent out of range");
        int r = a;
        for (int t = 0; t < j; ++t) r = pow(r, p);
        return r;
    }

private:
    std::vector<Symbol> add_tab_, mul_tab_;
    std::vector<Symbol> neg_tab_, inv_tab_;

    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q) + static_cast<std::size_t>(b);
    }

    static int smallest_prime_factor(int v) {
        for (int d = 2; d * d <= v; ++d)
            if (v % d == 0) return d;
        return v;
    }

    // --- polynomial helpers over GF(p), coefficient vectors (constant first) ---

    static std::vector<int> decode_poly(int v, int p, int len) {
        std::vector<int> c(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            c[static_cast<std::size_t>(i)] = v % p;
            v /= p;
        }
        return c;
    }

    static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
        int dm = static_cast<int>(m.size()) - 1;
        for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
            int c = a[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j <= dm; ++j) {
                auto& t = a[static_cast<std::size_t>(i - dm + j)];
                t = ((t - c * m[static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        a.resize(static_cast<std::size_t>(dm));
        return a;
    }

    static std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                                         const std::vector<int>& m, int p) {
        std::vector<int> prod(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        return poly_mod(std::move(prod), m, p);
    }

    static bool divides(const std::vector<int>& d, const std::vector<int>& f, int p) {
        // remainder of f by monic d
        std::vector<int> r = f;
        int dd = static_cast<int>(d.size()) - 1;
        for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
            int c = r[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) {
                auto& t = r[static_cast<std::size_t>(i - dd + j)];
                t = ((t - c * d[static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        for (int i = 0; i < dd; ++i)
            if (r[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    /// The lexicographically smallest monic irreducible of degree k over
    /// GF(p), ordering coefficient tuples from the leading side down. The
    /// choice is deterministic so generated groups are byte-stable.
    static std::vector<int> smallest_irreducible(int p, int k) {
        if (k == 1) return {0, 1};  // x
        int count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (int v = 0; v < count; ++v) {
            std::vector<int> f = decode_poly(v, p, k);
            f.push_back(1);  // monic of degree k
            // trial division by every monic polynomial of degree <= k/2
            bool irreducible = true;
            for (int deg = 1; deg <= k / 2 && irreducible; ++deg) {
                int dcount = 1;
                for (int i = 0; i < deg; ++i) dcount *= p;
                for (int dv = 0; dv < dcount; ++dv) {
                    std::vector<int> d = decode_poly(dv, p, deg);
                    d.push_back(1);
                    if (divides(d, f, p)) {
                        irreducible = false;
                        break;
                    }
                }
            }
            if (irreducible) return f;
        }
        throw std::logic_error("no irreducible polynomial found");  // cannot happen
    }

    void build_tables() {
        auto n = static_cast<std::size_t>(q);
        add_tab_.assign(n * n, 0);
        mul_tab_.assign(n * n, 0);
        neg_tab_.assign(n, 0);
        inv_tab_.assign(n, 0);

        auto encode = [&](const std::vector<int>& c) {
            int v = 0;
            for (int i = k - 1; i >= 0; --i) v = v * p + c[static_cast<std::size_t>(i)];
            return v;
        };

        for (int a = 0; a < q; ++a) {
            auto ca = decode_poly(a, p, k);
            std::vector<int> na(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) na[static_cast<std::size_t>(i)] = (p - ca[static_cast<std::size_t>(i)]) % p;
            neg_tab_[static_cast<std::size_t>(a)] = static_cast<Symbol>(encode(na));
            for (int b = 0; b < q; ++b) {
                auto cb = decode_poly(b, p, k);
                std::vector<int> s(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i)
                    s[static_cast<std::size_t>(i)] = (ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % p;
                add_tab_[idx(a, b)] = static_cast<Symbol>(encode(s));
                mul_tab_[idx(a, b)] = static_cast<Symbol>(encode(poly_mul_mod(ca, cb, modulus, p)));
            }
        }
        for (int a = 1; a < q; ++a) {
            for (int b = 1; b < q; ++b) {
                if (mul_tab_[idx(a, b)] == 1) {
                    inv_tab_[static_cast<std::size_t>(a)] = static_cast<Symbol>(b);
                    break;
                }
            }
        }
    }
};

inline FieldTable make_field(int q) { return FieldTable::make(q); }

inline int field_inv(const FieldTable& f, int a) { return f.inv(a); }

inline int frobenius(const FieldTable& f, int a, int j) { return f.frobenius(a, j); }

inline bool is_prime_power(int q) { return FieldTable::prime_power_split(q).has_value(); }

}  // namespace pex
