#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pex/latin.hpp"
#include "pex/partition.hpp"
#include "pex/perm_array.hpp"

namespace pex {

/// A permutation array together with its header metadata. The canonical
/// text form is: one '# n=<n> [d=<d>] count=<rows>' line, one '# key=value'
/// line per extra entry, then one space-separated row per line, LF endings,
/// no trailing spaces.
struct PaFile {
    PermutationArray pa;
    std::vector<std::pair<std::string, std::string>> extra;

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : extra)
            if (k == key) return &v;
        return nullptr;
    }
};

namespace detail {

[[noreturn]] inline void io_fail(const std::string& where, std::size_t line, const std::string& what) {
    throw std::runtime_error(where + ":" + std::to_string(line) + ": " + what);
}

}  // namespace detail

inline std::string pa_to_string(const PaFile& f) {
    std::string out = "# n=" + std::to_string(f.pa.num_symbols());
    if (f.pa.certified_min_distance) out += " d=" + std::to_string(*f.pa.certified_min_distance);
    out += " count=" + std::to_string(f.pa.num_rows());
    out += '\n';
    for (const auto& [k, v] : f.extra) out += "# " + k + "=" + v + "\n";
    for (std::size_t i = 0; i < f.pa.num_rows(); ++i) {
        auto row = f.pa.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

/// Parses the PA text format. Rows must be bijections of consistent length;
/// duplicate rows are allowed here (verification reports them as distance-0
/// witnesses). Errors carry 1-based line numbers.
inline PaFile pa_from_string(const std::string& text, const std::string& where = "<string>") {
    PaFile f;
    int n = -1;
    long long declared_count = -1;
    int declared_d = -1;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) detail::io_fail(where, lineno, "malformed header token '" + tok + "'");
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                try {
                    if (key == "n")
                        n = std::stoi(val);
                    else if (key == "d")
                        declared_d = std::stoi(val);
                    else if (key == "count")
                        declared_count = std::stoll(val);
                    else
                        f.extra.emplace_back(key, val);
                } catch (const std::exception&) {
                    detail::io_fail(where, lineno, "non-numeric value in header token '" + tok + "'");
                }
            }
            continue;
        }
        std::istringstream rs(line);
        std::vector<Symbol> row;
        long long v;
        while (rs >> v) {
            if (v < 0 || v >= kMaxSymbols) detail::io_fail(where, lineno, "symbol out of range");
            row.push_back(static_cast<Symbol>(v));
        }
        if (!rs.eof()) detail::io_fail(where, lineno, "malformed row");
        if (row.empty()) detail::io_fail(where, lineno, "empty row");
        if (n < 0) n = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != n)
            detail::io_fail(where, lineno, "row length " + std::to_string(row.size()) + " does not match n=" + std::to_string(n));
        if (f.pa.num_symbols() == 0) f.pa = PermutationArray(n);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (Symbol s : row) {
            if (s >= n || seen[s]) detail::io_fail(where, lineno, "row is not a permutation of Z_n");
            seen[s] = 1;
        }
        f.pa.append_raw(row);
        ++rows;
    }
    if (rows == 0) {
        if (n <= 0) throw std::runtime_error(where + ": no rows and no n header");
        f.pa = PermutationArray(n);
    }
    if (declared_count >= 0 && declared_count != static_cast<long long>(rows))
        throw std::runtime_error(where + ": header count=" + std::to_string(declared_count) +
                                 " but file has " + std::to_string(rows) + " rows");
    if (declared_d >= 0) f.pa.certified_min_distance = declared_d;
    return f;
}

inline PaFile read_pa(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return pa_from_string(ss.str(), path.string());
}

inline void write_pa(const PaFile& f, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << pa_to_string(f);
}

inline void write_pa(const PermutationArray& pa, const std::filesystem::path& path,
                     std::vector<std::pair<std::string, std::string>> extra = {}) {
    write_pa(PaFile{pa, std::move(extra)}, path);
}

// ---- Latin squares: m lines of m symbols; MOLS sets separated by '#' lines ----

inline std::string latin_to_string(const LatinSquare& sq) {
    std::string out;
    for (int i = 0; i < sq.m; ++i) {
        for (int j = 0; j < sq.m; ++j) {
            if (j) out += ' ';
            out += std::to_string(sq.at(i, j));
        }
        out += '\n';
    }
    return out;
}

inline std::string mols_to_string(const MolsSet& set) {
    std::string out;
    for (std::size_t s = 0; s < set.squares.size(); ++s) {
        if (s) out += "#\n";
        out += latin_to_string(set.squares[s]);
    }
    return out;
}

inline MolsSet mols_from_string(const std::string& text, const std::string& where = "<string>") {
    MolsSet set;
    std::vector<std::vector<Symbol>> rows;
    auto flush = [&](std::size_t lineno) {
        if (rows.empty()) return;
        LatinSquare sq;
        sq.m = static_cast<int>(rows.size());
        for (const auto& r : rows) {
            if (r.size() != rows.size()) detail::io_fail(where, lineno, "square is not m x m");
            sq.cells.insert(sq.cells.end(), r.begin(), r.end());
        }
        if (!sq.is_valid()) detail::io_fail(where, lineno, "not a Latin square");
        if (set.squares.empty()) set.m = sq.m;
        if (sq.m != set.m) detail::io_fail(where, lineno, "squares of mixed order");
        set.squares.push_back(std::move(sq));
        rows.clear();
    };
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            flush(lineno);
            continue;
        }
        std::istringstream rs(line);
        std::vector<Symbol> row;
        long long v;
        while (rs >> v) {
            if (v < 0 || v >= kMaxSymbols) detail::io_fail(where, lineno, "symbol out of range");
            row.push_back(static_cast<Symbol>(v));
        }
        if (!rs.eof()) detail::io_fail(where, lineno, "malformed row");
        rows.push_back(std::move(row));
    }
    flush(lineno + 1);
    return set;
}

inline MolsSet read_mols(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return mols_from_string(ss.str(), path.string());
}

// ---- Partition-system descriptors (JSON) ----
//
// {
//   "n": 4, "d": 4,
//   "blocks": [{"rows": ["0 1 2 3", ...]}, {"file": "m2.pa"}, ...],
//   "P": [[0,2],[1,3],[4]],
//   "Q": [[0,1],[2,3],[4]]          // optional "R"/"S" for the 2-symbol form
// }
//
// Sequential pipelines wrap inner descriptors:
// {"mode": "sequential", "systems": [...], "outer_P": ..., "outer_Q": ...}
// Rudimentary parallel: {"mode": "parallel-r", "r": 3, "d": 9, "blocks": [...]}.

struct ParallelBlocksSpec {
    int r = 0;
    int d = 0;
    std::vector<PermutationArray> blocks;
};

struct SequentialSpec {
    std::vector<PartitionSystem> systems;
    std::vector<std::vector<int>> outer_P, outer_Q;
};

namespace detail {

inline PermutationArray load_block(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    if (j.is_object() && j.contains("file")) {
        std::filesystem::path p = j.at("file").get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        return read_pa(p).pa;
    }
    if (j.is_object() && j.contains("rows")) {
        std::string text;
        for (const auto& r : j.at("rows")) text += r.get<std::string>() + "\n";
        return pa_from_string(text, "<inline block>").pa;
    }
    throw std::runtime_error("block descriptor needs a 'file' or 'rows' entry");
}

inline std::vector<std::vector<int>> load_classes(const nlohmann::json& j) {
    std::vector<std::vector<int>> out;
    for (const auto& cls : j) out.push_back(cls.get<std::vector<int>>());
    return out;
}

}  // namespace detail

inline PartitionSystem system_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    PartitionSystem sys;
    sys.n = j.at("n").get<int>();
    sys.d = j.at("d").get<int>();
    for (const auto& b : j.at("blocks")) sys.blocks.push_back(detail::load_block(b, base_dir));
    sys.P = detail::load_classes(j.at("P"));
    sys.Q = detail::load_classes(j.at("Q"));
    return sys;
}

inline PartitionSystem2 system2_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    PartitionSystem2 sys;
    sys.n = j.at("n").get<int>();
    sys.d = j.at("d").get<int>();
    for (const auto& b : j.at("blocks")) sys.blocks.push_back(detail::load_block(b, base_dir));
    sys.P = detail::load_classes(j.at("P"));
    sys.Q = detail::load_classes(j.at("Q"));
    sys.R = detail::load_classes(j.at("R"));
    sys.S = detail::load_classes(j.at("S"));
    return sys;
}

inline SequentialSpec sequential_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    SequentialSpec spec;
    for (const auto& s : j.at("systems")) spec.systems.push_back(system_from_json(s, base_dir));
    spec.outer_P = detail::load_classes(j.at("outer_P"));
    spec.outer_Q = detail::load_classes(j.at("outer_Q"));
    return spec;
}

inline ParallelBlocksSpec parallel_blocks_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    ParallelBlocksSpec spec;
    spec.r = j.at("r").get<int>();
    spec.d = j.at("d").get<int>();
    for (const auto& b : j.at("blocks")) spec.blocks.push_back(detail::load_block(b, base_dir));
    return spec;
}

inline nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace pex
