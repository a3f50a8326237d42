#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pex {

/// A 0/1 integer linear program: named binary variables, integer-coefficient
/// linear constraints, and a maximization objective.
struct IlpModel {
    struct Term {
        long long coef;
        int var;
    };
    enum class Cmp { le, eq, ge };
    struct Constraint {
        std::string name;
        std::vector<Term> terms;
        Cmp cmp = Cmp::le;
        long long rhs = 0;
    };

    std::vector<std::string> var_names;
    std::map<std::string, int> var_index;
    std::vector<Constraint> constraints;
    std::vector<Term> objective;

    int add_var(const std::string& name) {
        auto [it, inserted] = var_index.emplace(name, static_cast<int>(var_names.size()));
        if (inserted) var_names.push_back(name);
        return it->second;
    }

    int var(const std::string& name) const {
        auto it = var_index.find(name);
        if (it == var_index.end()) throw std::invalid_argument("unknown variable " + name);
        return it->second;
    }

    void add_constraint(std::string name, std::vector<Term> terms, Cmp cmp, long long rhs) {
        for (const auto& t : terms)
            if (t.var < 0 || t.var >= static_cast<int>(var_names.size()))
                throw std::invalid_argument("constraint references undeclared variable");
        constraints.push_back({std::move(name), std::move(terms), cmp, rhs});
    }
};

struct SolverConfig {
    std::uint64_t node_budget = 50'000'000;
    double time_budget_s = 120.0;
    std::uint64_t seed = 0;  // accepted for interface symmetry; the search is deterministic
};

struct SolveResult {
    enum class Status { optimal, feasible, infeasible, no_solution_found };
    Status status = Status::no_solution_found;
    std::vector<std::uint8_t> assignment;
    long long objective = 0;
    std::uint64_t nodes = 0;
    bool proven_optimal = false;
};

/// Exact best-first branch and bound for binary programs. The bound is
/// combinatorial (fixed objective value plus the positive coefficients of
/// the free variables); feasibility pruning uses per-constraint attainable
/// ranges. Deterministic: branch order is by descending |objective
/// coefficient| and the queue breaks ties by node id.
inline SolveResult solve_ilp(const IlpModel& model, const SolverConfig& cfg = {}) {
    const int nv = static_cast<int>(model.var_names.size());
    SolveResult res;

    // static branch order
    std::vector<long long> obj_coef(static_cast<std::size_t>(nv), 0);
    for (const auto& t : model.objective) obj_coef[static_cast<std::size_t>(t.var)] += t.coef;
    std::vector<int> order(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        long long ca = std::llabs(obj_coef[static_cast<std::size_t>(a)]);
        long long cb = std::llabs(obj_coef[static_cast<std::size_t>(b)]);
        if (ca != cb) return ca > cb;
        return a < b;
    });

    struct Node {
        long long bound;
        std::uint64_t id;
        int depth;  // variables fixed: order[0..depth)
        std::vector<std::uint8_t> fixed;

        bool operator<(const Node& other) const {  // priority_queue: larger bound first
            if (bound != other.bound) return bound < other.bound;
            return id < other.id;  // LIFO on ties, so a first incumbent appears quickly
        }
    };

    auto feasible_range_ok = [&](const std::vector<std::uint8_t>& fixed, int depth) {
        // fixed[v] is meaningful only for the first `depth` vars in `order`
        std::vector<char> is_fixed(static_cast<std::size_t>(nv), 0);
        for (int t = 0; t < depth; ++t) is_fixed[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = 1;
        for (const auto& c : model.constraints) {
            long long lo = 0, hi = 0;
            for (const auto& term : c.terms) {
                if (is_fixed[static_cast<std::size_t>(term.var)]) {
                    long long v = term.coef * fixed[static_cast<std::size_t>(term.var)];
                    lo += v;
                    hi += v;
                } else if (term.coef > 0) {
                    hi += term.coef;
                } else {
                    lo += term.coef;
                }
            }
            switch (c.cmp) {
                case IlpModel::Cmp::le:
                    if (lo > c.rhs) return false;
                    break;
                case IlpModel::Cmp::ge:
                    if (hi < c.rhs) return false;
                    break;
                case IlpModel::Cmp::eq:
                    if (lo > c.rhs || hi < c.rhs) return false;
                    break;
            }
        }
        return true;
    };

    auto upper_bound = [&](const std::vector<std::uint8_t>& fixed, int depth) {
        std::vector<char> is_fixed(static_cast<std::size_t>(nv), 0);
        for (int t = 0; t < depth; ++t) is_fixed[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = 1;
        long long b = 0;
        for (int v = 0; v < nv; ++v) {
            long long c = obj_coef[static_cast<std::size_t>(v)];
            if (is_fixed[static_cast<std::size_t>(v)])
                b += c * fixed[static_cast<std::size_t>(v)];
            else if (c > 0)
                b += c;
        }
        return b;
    };

    auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(cfg.time_budget_s);

    std::priority_queue<Node> open;
    std::uint64_t next_id = 0;
    open.push({upper_bound({}, 0), next_id++, 0, std::vector<std::uint8_t>(static_cast<std::size_t>(nv), 0)});

    bool have_incumbent = false;
    long long best = 0;
    std::vector<std::uint8_t> best_assignment;
    bool exhausted = true;

    while (!open.empty()) {
        if (res.nodes >= cfg.node_budget || std::chrono::steady_clock::now() > deadline) {
            exhausted = false;
            break;
        }
        Node node = open.top();
        open.pop();
        ++res.nodes;
        if (have_incumbent && node.bound <= best) continue;  // cannot improve
        if (node.depth == nv) {
            // fully assigned and already known feasible
            long long obj = 0;
            for (int v = 0; v < nv; ++v) obj += obj_coef[static_cast<std::size_t>(v)] * node.fixed[static_cast<std::size_t>(v)];
            if (!have_incumbent || obj > best) {
                have_incumbent = true;
                best = obj;
                best_assignment = node.fixed;
            }
            continue;
        }
        int v = order[static_cast<std::size_t>(node.depth)];
        for (std::uint8_t val : {std::uint8_t{0}, std::uint8_t{1}}) {  // 1-branch pushed last, explored first
            Node child = node;
            child.id = next_id++;
            child.depth = node.depth + 1;
            child.fixed[static_cast<std::size_t>(v)] = val;
            if (!feasible_range_ok(child.fixed, child.depth)) continue;
            child.bound = upper_bound(child.fixed, child.depth);
            if (have_incumbent && child.bound <= best) continue;
            open.push(std::move(child));
        }
    }

    if (have_incumbent) {
        res.status = exhausted ? SolveResult::Status::optimal : SolveResult::Status::feasible;
        res.proven_optimal = exhausted;
        res.objective = best;
        res.assignment = std::move(best_assignment);
    } else if (exhausted) {
        res.status = SolveResult::Status::infeasible;
    } else {
        res.status = SolveResult::Status::no_solution_found;
    }
    return res;
}

/// LP text rendering (Maximize / Subject To / Binary / End). Output is
/// byte-stable: variables and constraints appear in model order. Long
/// expressions wrap at ~200 columns with a leading space on continuations.
inline std::string export_lp(const IlpModel& model) {
    std::string out;
    auto emit_expr = [&](std::string line, const std::vector<IlpModel::Term>& terms, const std::string& tail) {
        bool first = true;
        for (const auto& t : terms) {
            std::string piece;
            long long c = t.coef;
            if (first) {
                piece += " ";
                if (c < 0) piece += "- ";
            } else {
                piece += (c < 0) ? " - " : " + ";
            }
            long long mag = c < 0 ? -c : c;
            if (mag != 1) piece += std::to_string(mag) + " ";
            piece += model.var_names[static_cast<std::size_t>(t.var)];
            if (line.size() + piece.size() > 200) {
                out += line;
                out += '\n';
                line = " ";
                if (piece.front() == ' ') piece.erase(piece.begin());
            }
            line += piece;
            first = false;
        }
        line += tail;
        out += line;
        out += '\n';
    };

    out += "Maximize\n";
    emit_expr(" obj:", model.objective, "");
    out += "Subject To\n";
    for (std::size_t i = 0; i < model.constraints.size(); ++i) {
        const auto& c = model.constraints[i];
        std::string name = c.name.empty() ? ("c" + std::to_string(i)) : c.name;
        const char* cmp = c.cmp == IlpModel::Cmp::le ? "<=" : (c.cmp == IlpModel::Cmp::eq ? "=" : ">=");
        emit_expr(" " + name + ":", c.terms, std::string(" ") + cmp + " " + std::to_string(c.rhs));
    }
    out += "Binary\n";
    for (const auto& v : model.var_names) {
        out += " " + v;
        out += '\n';
    }
    out += "End\n";
    return out;
}

/// Parses the subset of the LP format produced by export_lp; used to
/// round-trip exported models.
inline IlpModel parse_lp(const std::string& text) {
    IlpModel model;
    enum class Section { none, objective, constraints, binary, done };
    Section sec = Section::none;

    // join continuation lines (they start with a space after a wrapped line)
    std::vector<std::string> raw;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        raw.push_back(line);
    }

    std::vector<std::string> logical;
    {
        bool joinable = false;  // expression lines may wrap; Binary entries never do
        for (const auto& l : raw) {
            if (l == "Maximize" || l == "Subject To") {
                joinable = true;
                logical.push_back(l);
            } else if (l == "Binary" || l == "End") {
                joinable = false;
                logical.push_back(l);
            } else if (joinable && l.find(':') == std::string::npos && !logical.empty()) {
                logical.back() += l;  // continuation of a wrapped expression
            } else {
                logical.push_back(l);
            }
        }
    }

    // first pass: register variables in Binary-section order, so a
    // parse/export round trip is byte-identical
    {
        bool in_binary = false;
        for (const auto& l : logical) {
            if (l == "Binary") {
                in_binary = true;
                continue;
            }
            if (l == "End" || l == "Maximize" || l == "Subject To") {
                in_binary = false;
                continue;
            }
            if (in_binary) {
                std::istringstream vs(l);
                std::string v;
                while (vs >> v) model.add_var(v);
            }
        }
    }

    auto parse_terms = [&](const std::string& body, std::vector<IlpModel::Term>& out) {
        std::istringstream ts(body);
        std::string tok;
        long long sign = 1;
        long long coef = 1;
        bool have_coef = false;
        while (ts >> tok) {
            if (tok == "+") {
                sign = 1;
                coef = 1;
                have_coef = false;
            } else if (tok == "-") {
                sign = -1;
                coef = 1;
                have_coef = false;
            } else if (std::isdigit(static_cast<unsigned char>(tok[0])) ||
                       (tok[0] == '-' && tok.size() > 1)) {
                coef = std::stoll(tok);
                have_coef = true;
            } else {
                int v = model.add_var(tok);
                out.push_back({sign * (have_coef ? coef : 1), v});
                sign = 1;
                coef = 1;
                have_coef = false;
            }
        }
    };

    for (const auto& l : logical) {
        if (l == "Maximize") {
            sec = Section::objective;
            continue;
        }
        if (l == "Subject To") {
            sec = Section::constraints;
            continue;
        }
        if (l == "Binary") {
            sec = Section::binary;
            continue;
        }
        if (l == "End") {
            sec = Section::done;
            continue;
        }
        if (sec == Section::objective) {
            auto colon = l.find(':');
            parse_terms(l.substr(colon + 1), model.objective);
        } else if (sec == Section::constraints) {
            auto colon = l.find(':');
            std::string name = l.substr(0, colon);
            while (!name.empty() && name.front() == ' ') name.erase(name.begin());
            std::string rest = l.substr(colon + 1);
            IlpModel::Cmp cmp;
            std::size_t pos;
            if ((pos = rest.find("<=")) != std::string::npos) {
                cmp = IlpModel::Cmp::le;
            } else if ((pos = rest.find(">=")) != std::string::npos) {
                cmp = IlpModel::Cmp::ge;
            } else {
                pos = rest.find('=');
                cmp = IlpModel::Cmp::eq;
            }
            std::string lhs = rest.substr(0, pos);
            std::string rhs = rest.substr(pos + (cmp == IlpModel::Cmp::eq ? 1 : 2));
            std::vector<IlpModel::Term> terms;
            parse_terms(lhs, terms);
            model.add_constraint(name, std::move(terms), cmp, std::stoll(rhs));
        } else if (sec == Section::binary) {
            std::istringstream vs(l);
            std::string v;
            while (vs >> v) model.add_var(v);
        }
    }
    return model;
}

}  // namespace pex
