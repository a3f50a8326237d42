#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "pex/extend.hpp"
#include "pex/groups.hpp"
#include "pex/pa_io.hpp"
#include "pex/partition.hpp"
#include "pex/prng.hpp"
#include "pex/reference_data.hpp"
#include "pex/verify.hpp"

using namespace pex;

namespace {

int brute_min_distance(const PermutationArray& a) {
    int best = a.num_symbols();
    for (std::size_t i = 0; i < a.num_rows(); ++i)
        for (std::size_t j = i + 1; j < a.num_rows(); ++j)
            best = std::min(best, hamming_distance(a.row(i), a.row(j)));
    return best;
}

int brute_cross_distance(const PermutationArray& a, const PermutationArray& b) {
    int best = a.num_symbols();
    for (std::size_t i = 0; i < a.num_rows(); ++i)
        for (std::size_t j = 0; j < b.num_rows(); ++j)
            best = std::min(best, hamming_distance(a.row(i), b.row(j)));
    return best;
}

PartitionSystem table1_system() {
    auto blocks = cyclic_coset_decomposition(agl1(4));
    PartitionSystem sys;
    sys.n = 4;
    sys.d = 4;
    sys.blocks = blocks;
    sys.P = {{0, 2}, {1, 3}, {4}};
    sys.Q = {{0, 1}, {2, 3}, {4}};
    return sys;
}

// random partition of Z_n into k nonempty classes, round-robin after a shuffle
std::vector<std::vector<int>> random_partition(int n, int k, SplitMix64& rng) {
    auto shuffled = random_permutation(n, rng);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i % k)].push_back(shuffled[i]);
    return out;
}

}  // namespace

TEST_CASE("validate accepts the 4-symbol example system") {
    auto sys = table1_system();
    auto rep = validate(sys);
    CHECK(rep.valid);
    CHECK(rep.skipped_checks.empty());
}

TEST_CASE("validate rejects broken systems") {
    auto sys = table1_system();
    sys.P = {{0, 2}, {0, 2}, {4}};  // P no longer a partition
    auto rep = validate(sys);
    CHECK_FALSE(rep.valid);
    CHECK(rep.first_violation.find("partition") != std::string::npos);

    auto sys2 = table1_system();
    sys2.blocks[1] = sys2.blocks[0];  // shared rows
    CHECK_FALSE(validate(sys2).valid);

    auto sys3 = table1_system();
    sys3.d = 5;  // blocks only reach distance 4
    CHECK_FALSE(validate(sys3).valid);
}

TEST_CASE("covered reports designated positions") {
    auto sys = table1_system();
    auto cov = covered(sys.blocks[0], sys.P[0], sys.Q[0]);
    CHECK(cov.covered_count == 4);
    CHECK(cov.designated == std::vector<int>{0, 0, 2, 2});

    auto none = covered(sys.blocks[0], sys.P[0], {});
    CHECK(none.covered_count == 0);
    CHECK(none.uncovered.size() == 4);
}

TEST_CASE("simple_extend reproduces the published 4-symbol extension") {
    auto out = simple_extend(table1_system());
    CHECK(out.num_rows() == 12);
    CHECK(out.num_symbols() == 5);
    std::ifstream golden(std::string(PEX_DATA_DIR) + "/ext_agl4_golden.pa");
    REQUIRE(golden.good());
    std::stringstream ss;
    ss << golden.rdbuf();
    CHECK(out == pa_from_string(ss.str()).pa);
    CHECK(verify_pa(out, 4).certifies(4));
}

TEST_CASE("append-only system just appends the new symbol") {
    auto blocks = cyclic_coset_decomposition(agl1(4));
    PartitionSystem sys;
    sys.n = 4;
    sys.d = 4;
    sys.blocks = {blocks[2]};
    sys.P = {{4}};
    sys.Q = {{4}};
    auto out = simple_extend(sys);
    CHECK(out.num_rows() == 4);
    for (std::size_t r = 0; r < out.num_rows(); ++r) {
        CHECK(out.row(r)[4] == 4);
        CHECK(hamming_distance(out.row(r).subspan(0, 4), blocks[2].row(r)) == 0);
    }
}

TEST_CASE("simple extension on randomized coset systems keeps the distance bound") {
    SplitMix64 rng(20240817);
    int built = 0;
    for (int q : {5, 7, 8, 9}) {
        auto blocks = cyclic_coset_decomposition(agl1(q));
        for (int trial = 0; trial < 50; ++trial) {
            int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min<std::size_t>(blocks.size() - 1, 4))));
            PartitionSystem sys;
            sys.n = q;
            sys.d = q;
            for (int i = 0; i < k; ++i) sys.blocks.push_back(blocks[static_cast<std::size_t>(i)]);
            sys.blocks.push_back(blocks[static_cast<std::size_t>(k)]);  // append-only block
            sys.P = random_partition(q, k, rng);
            sys.P.push_back({q});
            sys.Q = random_partition(q, k, rng);
            sys.Q.push_back({q});
            REQUIRE(validate(sys).valid);

            auto out = simple_extend(sys);
            CHECK(out.validate_rows() == std::nullopt);
            CHECK(brute_min_distance(out) >= q);

            // size bookkeeping: sum of per-block extension counts
            std::size_t expect = sys.blocks.back().num_rows();
            for (int i = 0; i < k; ++i)
                expect += covered(sys.blocks[static_cast<std::size_t>(i)], sys.P[static_cast<std::size_t>(i)],
                                  sys.Q[static_cast<std::size_t>(i)])
                              .covered_count;
            CHECK(out.num_rows() == expect);
            ++built;
        }
    }
    CHECK(built == 200);
}

TEST_CASE("extensions of disjoint systems stay at distance d-1 from each other") {
    SplitMix64 rng(555);
    for (int q : {5, 7, 9}) {
        auto blocks = cyclic_coset_decomposition(agl1(q));
        for (int trial = 0; trial < 12; ++trial) {
            auto make_sys = [&](std::size_t from, int k) {
                PartitionSystem sys;
                sys.n = q;
                sys.d = q;
                for (int i = 0; i < k; ++i) sys.blocks.push_back(blocks[from + static_cast<std::size_t>(i)]);
                sys.P = random_partition(q, k, rng);
                sys.Q = random_partition(q, k, rng);
                return sys;
            };
            auto s1 = make_sys(0, 2);
            auto s2 = make_sys(2, 2);
            auto e1 = simple_extend(s1);
            auto e2 = simple_extend(s2);
            if (e1.num_rows() == 0 || e2.num_rows() == 0) continue;
            CHECK(brute_cross_distance(e1, e2) >= q - 1);
        }
    }
}

TEST_CASE("extension by position is reversible and creates no duplicates") {
    SplitMix64 rng(9090);
    auto blocks = cyclic_coset_decomposition(agl1(7));
    PartitionSystem sys;
    sys.n = 7;
    sys.d = 7;
    sys.blocks = {blocks[0], blocks[1]};
    sys.P = random_partition(7, 2, rng);
    sys.Q = random_partition(7, 2, rng);
    auto cov0 = covered(sys.blocks[0], sys.P[0], sys.Q[0]);
    auto out = simple_extend(sys);
    CHECK(out.validate_rows() == std::nullopt);
    // recover each source row from its extension
    std::size_t idx = 0;
    for (std::size_t r = 0; r < sys.blocks[0].num_rows(); ++r) {
        if (cov0.designated[r] < 0) continue;
        auto ext_row = out.row(idx++);
        int p = cov0.designated[r];
        std::vector<Symbol> rec(ext_row.begin(), ext_row.end() - 1);
        rec[static_cast<std::size_t>(p)] = ext_row[7];
        CHECK(hamming_distance(rec, sys.blocks[0].row(r)) == 0);
    }
}

TEST_CASE("sequential extension on a small affine group") {
    auto blocks = cyclic_coset_decomposition(agl1(5));
    auto make_sys = [&](std::size_t b0, std::size_t b1, std::vector<std::vector<int>> p,
                        std::vector<std::vector<int>> q) {
        PartitionSystem sys;
        sys.n = 5;
        sys.d = 5;
        sys.blocks = {blocks[b0], blocks[b1]};
        sys.P = std::move(p);
        sys.Q = std::move(q);
        return sys;
    };
    std::vector<PartitionSystem> systems = {
        make_sys(0, 1, {{0, 1, 2}, {3, 4}}, {{0, 1}, {2, 3, 4}}),
        make_sys(2, 3, {{0, 1, 2}, {3, 4}}, {{0, 1}, {2, 3, 4}}),
    };
    auto res = sequential_extend(systems, {{0, 1, 2, 3, 4, 5}, {6}}, {{0, 1, 2, 3, 4, 5}, {6}});
    REQUIRE(res.stage1.size() == 2);
    auto cov = covered(res.stage1[0], {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5});
    CHECK(res.final_pa.num_rows() == cov.covered_count + res.stage1[1].num_rows());
    CHECK(res.final_pa.num_symbols() == 7);
    CHECK(brute_min_distance(res.final_pa) >= 5);

    // sharing a block between systems is an error
    std::vector<PartitionSystem> overlapping = {systems[0], systems[0]};
    CHECK_THROWS_AS(sequential_extend(overlapping, {{0, 1, 2, 3, 4, 5}, {6}}, {{0, 1, 2, 3, 4, 5}, {6}}),
                    std::invalid_argument);
}

TEST_CASE("rudimentary parallel extension, r = 1") {
    auto blocks = cyclic_coset_decomposition(agl1(4));
    auto out = parallel_rudimentary({blocks[0], blocks[1]}, 1, 4);
    CHECK(out.num_rows() == 8);
    CHECK(out.num_symbols() == 5);
    CHECK(out.validate_rows() == std::nullopt);
    CHECK(brute_min_distance(out) >= 4);
    // first block: leading symbol swapped to the back, 4 in front
    CHECK(out.row(0)[0] == 4);
    CHECK(out.row(0)[4] == blocks[0].row(0)[0]);
    // second block: 4 appended
    CHECK(out.row(4)[4] == 4);
}

TEST_CASE("rudimentary parallel extension on the published 9-symbol blocks") {
    auto blocks = ref::parallel9_blocks();
    REQUIRE(blocks.size() == 6);
    for (const auto& b : blocks) {
        CHECK(b.num_rows() == 9);
        CHECK(brute_min_distance(b) == 9);
    }
    PermutationArray all(9);
    for (const auto& b : blocks) all.append_all(b);
    CHECK(brute_min_distance(all) == 6);

    auto out = parallel_rudimentary(blocks, 3, 9);
    CHECK(out.num_rows() == 54);
    CHECK(out.num_symbols() == 12);
    CHECK(out.validate_rows() == std::nullopt);
    CHECK(brute_min_distance(out) == 9);

    // no new agreements between rows of different blocks
    SplitMix64 rng(31);
    for (int t = 0; t < 500; ++t) {
        auto bi = rng.below(6), bj = rng.below(6);
        if (bi == bj) continue;
        auto ri = rng.below(9), rj = rng.below(9);
        int before = 9 - hamming_distance(blocks[bi].row(ri), blocks[bj].row(rj));
        int after = 12 - hamming_distance(out.row(bi * 9 + ri), out.row(bj * 9 + rj));
        CHECK(after <= before);
    }

    CHECK_THROWS_AS(parallel_rudimentary({blocks[0], blocks[1], blocks[2]}, 3, 9), std::invalid_argument);
}

TEST_CASE("rudimentary parallel extension rejects bad distance preconditions") {
    auto blocks = cyclic_coset_decomposition(agl1(4));
    // d = 5 exceeds the blocks' distance 4
    CHECK_THROWS_AS(parallel_rudimentary({blocks[0], blocks[1]}, 1, 5), std::invalid_argument);
}

TEST_CASE("2-covering excludes rows without a valid second position") {
    PermutationArray blk(4);
    blk.append(Permutation::from_ints({0, 1, 2, 3}));
    blk.append(Permutation::from_ints({0, 2, 1, 3}));
    auto cov = covered2(blk, {0, 1}, {0}, {2, 3}, {1});
    // row 0: sigma(0)=0 in Q but sigma(2)=2, sigma(3)=3 miss S={1} -> uncovered
    CHECK(cov.designated[0] == std::pair<int, int>(-1, -1));
    // row 1: sigma(0)=0 in Q, sigma(2)=1 in S -> pair (0,2)
    CHECK(cov.designated[1] == std::pair<int, int>(0, 2));
    CHECK(cov.covered_count == 1);
}

TEST_CASE("two append blocks gain opposite tails") {
    auto blocks = cyclic_coset_decomposition(agl1(5));
    PartitionSystem2 sys;
    sys.n = 5;
    sys.d = 5;
    sys.blocks = {blocks[0], blocks[1]};
    sys.P = {{5}, {6}};
    sys.Q = {{5}, {6}};
    sys.R = {{5}, {6}};
    sys.S = {{5}, {6}};
    auto out = parallel_2ext(sys);
    CHECK(out.num_rows() == 10);
    CHECK(out.num_symbols() == 7);
    CHECK(out.row(0)[5] == 5);
    CHECK(out.row(0)[6] == 6);
    CHECK(out.row(5)[5] == 6);
    CHECK(out.row(5)[6] == 5);
    // the opposite tails alone keep the blocks apart in the two new positions
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 5; j < 10; ++j) {
            int after = 7 - hamming_distance(out.row(i), out.row(j));
            int before = 5 - hamming_distance(blocks[0].row(i), blocks[1].row(j - 5));
            CHECK(after == before);
        }
}

TEST_CASE("parallel_2ext end to end on a small system") {
    auto blocks = cyclic_coset_decomposition(agl1(7));
    PartitionSystem2 sys;
    sys.n = 7;
    sys.d = 7;
    sys.blocks = {blocks[0], blocks[1], blocks[2], blocks[3]};
    sys.P = {{0, 1, 2, 3}, {4, 5, 6}, {}, {}};
    sys.R = {{4, 5, 6}, {0, 1, 2, 3}, {}, {}};
    sys.Q = {{0, 1, 2}, {3, 4, 5, 6}, {}, {}};
    sys.S = {{3, 4, 5, 6}, {0, 1, 2}, {}, {}};
    REQUIRE(validate(sys).valid);
    auto out = parallel_2ext(sys);
    CHECK(out.num_symbols() == 9);
    CHECK(out.validate_rows() == std::nullopt);
    CHECK(brute_min_distance(out) >= 7);
    std::size_t covered_total = covered2(sys.blocks[0], sys.P[0], sys.Q[0], sys.R[0], sys.S[0]).covered_count +
                                covered2(sys.blocks[1], sys.P[1], sys.Q[1], sys.R[1], sys.S[1]).covered_count;
    CHECK(out.num_rows() == covered_total + 14);
}

TEST_CASE("validate rejects overlapping P and R classes") {
    auto blocks = cyclic_coset_decomposition(agl1(7));
    PartitionSystem2 sys;
    sys.n = 7;
    sys.d = 7;
    sys.blocks = {blocks[0], blocks[1]};
    sys.P = {{0, 1, 2, 3}, {4, 5, 6}};
    sys.R = {{3, 4, 5, 6}, {0, 1, 2}};  // P_0 and R_0 share position 3
    sys.Q = {{0, 1, 2}, {3, 4, 5, 6}};
    sys.S = {{3, 4, 5, 6}, {0, 1, 2}};
    auto rep = validate(sys);
    CHECK_FALSE(rep.valid);
    CHECK(rep.first_violation.find("intersect") != std::string::npos);
}
