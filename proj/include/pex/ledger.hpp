#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pex/gf.hpp"
#include "pex/reference_data.hpp"

namespace pex {

struct BoundRecord {
    int n = 0;
    int d = 0;
    long long bound = 0;
    std::string method;
    std::string source;  // "published" | "constructed" | "imported"
    std::string artifact;
    std::string verified_mode;

    void check() const {
        if (bound < 1) throw std::invalid_argument("BoundRecord: bound must be >= 1");
        if (source == "constructed" && artifact.empty())
            throw std::invalid_argument("BoundRecord: constructed bounds need an artifact path");
    }
};

/// Current best bound per (n, d) plus an append-only history. Persisted as
/// a CSV snapshot and a JSON-lines history, both diff-friendly.
class Ledger {
public:
    void record(BoundRecord rec) {
        rec.check();
        history_.push_back(rec);
        auto key = std::make_pair(rec.n, rec.d);
        auto it = current_.find(key);
        if (it == current_.end() || rec.bound > it->second.bound) current_[key] = std::move(rec);
    }

    std::optional<BoundRecord> best(int n, int d) const {
        auto it = current_.find({n, d});
        if (it == current_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<std::pair<int, int>, BoundRecord>& current() const { return current_; }
    const std::vector<BoundRecord>& history() const { return history_; }

    std::string to_csv() const {
        std::string out = "n,d,bound,method,source,artifact,verified_mode\n";
        for (const auto& [key, rec] : current_) {
            out += std::to_string(rec.n) + "," + std::to_string(rec.d) + "," + std::to_string(rec.bound) + "," +
                   csv_field(rec.method) + "," + csv_field(rec.source) + "," + csv_field(rec.artifact) + "," +
                   csv_field(rec.verified_mode) + "\n";
        }
        return out;
    }

    static Ledger from_csv(const std::string& text) {
        Ledger led;
        std::istringstream in(text);
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (first) {
                first = false;
                continue;  // header
            }
            std::vector<std::string> f;
            std::string cur;
            for (char c : line) {
                if (c == ',') {
                    f.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            f.push_back(cur);
            if (f.size() != 7) throw std::runtime_error("ledger CSV: bad row '" + line + "'");
            BoundRecord rec;
            rec.n = std::stoi(f[0]);
            rec.d = std::stoi(f[1]);
            rec.bound = std::stoll(f[2]);
            rec.method = f[3];
            rec.source = f[4];
            rec.artifact = f[5];
            rec.verified_mode = f[6];
            led.record(std::move(rec));
        }
        return led;
    }

    void save(const std::filesystem::path& csv_path) const {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + csv_path.string() + " for writing");
        out << to_csv();
    }

    static Ledger load(const std::filesystem::path& csv_path) {
        std::ifstream in(csv_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + csv_path.string());
        std::stringstream ss;
        ss << in.rdbuf();
        return from_csv(ss.str());
    }

    void append_history(const std::filesystem::path& jsonl_path) const {
        std::ofstream out(jsonl_path, std::ios::binary | std::ios::app);
        if (!out) throw std::runtime_error("cannot open " + jsonl_path.string() + " for writing");
        for (const auto& rec : history_) {
            nlohmann::json j{{"n", rec.n},           {"d", rec.d},
                             {"bound", rec.bound},   {"method", rec.method},
                             {"source", rec.source}, {"artifact", rec.artifact},
                             {"verified_mode", rec.verified_mode}};
            out << j.dump() << "\n";
        }
    }

private:
    static std::string csv_field(std::string s) {
        for (char& c : s)
            if (c == ',' || c == '\n') c = ';';
        return s;
    }

    std::map<std::pair<int, int>, BoundRecord> current_;
    std::vector<BoundRecord> history_;
};

/// N(n) lower bound: computed as n-1 for prime powers, otherwise looked up
/// in the small bundled table.
inline std::optional<int> mols_count_lower(int n) {
    if (n >= 2 && is_prime_power(n)) return n - 1;
    for (const auto& e : ref::mols_counts())
        if (e.n == n) return e.n_lower;
    return std::nullopt;
}

struct ConjectureVerdict {
    int n = 0;
    long long bound = 0;
    long long rhs = 0;
    int sqrt_term = 0;
    int mols_term = 0;
    bool holds = false;
};

inline long long isqrt_floor(long long v) {
    long long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

/// Checks bound >= (n-1) * min(floor(sqrt(n-1)), N(n-1)).
inline ConjectureVerdict conjecture_check(int n, long long bound_for_n_minus_1_distance) {
    auto mols = mols_count_lower(n - 1);
    if (!mols) throw std::invalid_argument("conjecture_check: no N(" + std::to_string(n - 1) + ") entry");
    ConjectureVerdict v;
    v.n = n;
    v.bound = bound_for_n_minus_1_distance;
    v.sqrt_term = static_cast<int>(isqrt_floor(n - 1));
    v.mols_term = *mols;
    v.rhs = static_cast<long long>(n - 1) * std::min<long long>(v.sqrt_term, v.mols_term);
    v.holds = v.bound >= v.rhs;
    return v;
}

struct RefComparison {
    int n = 0, d = 0;
    long long constructed = 0;
    long long reference = 0;
    // "match" | "exceed" | "fall-short" | "no-reference"
    std::string verdict;
};

inline std::optional<long long> reference_bound(int n, int d) {
    for (const auto& r : ref::nd_bounds())
        if (r.n == n && r.d == d) return r.bound;
    if (d == n - 2) {
        for (const auto& r : ref::n2_bounds())
            if (r.n == n) return r.bound;
    }
    if (d == n - 1) {
        for (const auto& r : ref::n1_bounds_lt300())
            if (r.n == n) return r.bound;
        for (const auto& r : ref::n1_bounds_300_600())
            if (r.n == n) return r.bound;
    }
    return std::nullopt;
}

/// Compares every constructed bound in the ledger against the bundled
/// reference tables.
inline std::vector<RefComparison> compare_to_reference(const Ledger& ledger) {
    std::vector<RefComparison> out;
    for (const auto& [key, rec] : ledger.current()) {
        if (rec.source != "constructed") continue;
        RefComparison c;
        c.n = rec.n;
        c.d = rec.d;
        c.constructed = rec.bound;
        auto ref_b = reference_bound(rec.n, rec.d);
        if (!ref_b) {
            c.verdict = "no-reference";
        } else {
            c.reference = *ref_b;
            c.verdict = rec.bound == *ref_b ? "match" : (rec.bound > *ref_b ? "exceed" : "fall-short");
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace pex
