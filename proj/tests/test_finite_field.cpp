#include <catch_amalgamated.hpp>

#include "pex/gf.hpp"
#include "pex/prng.hpp"

using namespace pex;

namespace {

void check_axioms_exhaustive(const FieldTable& f) {
    const int q = f.q;
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (int b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (int c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

int multiplicative_order(const FieldTable& f, int a) {
    int v = a, ord = 1;
    while (v != 1) {
        v = f.mul(v, a);
        ++ord;
    }
    return ord;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    auto f = make_field(5);
    CHECK(f.p == 5);
    CHECK(f.k == 1);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            CHECK(f.add(a, b) == (a + b) % 5);
            CHECK(f.mul(a, b) == (a * b) % 5);
        }
}

TEST_CASE("GF(4) uses x^2+x+1 and 2*2 = 3") {
    auto f = make_field(4);
    CHECK(f.modulus == std::vector<int>{1, 1, 1});
    CHECK(f.mul(2, 2) == 3);
    check_axioms_exhaustive(f);
}

TEST_CASE("non prime powers are rejected") {
    CHECK_THROWS_AS(make_field(6), std::invalid_argument);
    CHECK_THROWS_AS(make_field(12), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1), std::invalid_argument);
    CHECK(is_prime_power(9));
    CHECK_FALSE(is_prime_power(10));
}

TEST_CASE("inverses") {
    auto f7 = make_field(7);
    CHECK(f7.inv(1) == 1);
    CHECK(f7.inv(3) == 5);
    CHECK_THROWS_AS(f7.inv(0), std::invalid_argument);
    auto f4 = make_field(4);
    for (int a = 1; a < 4; ++a) CHECK(f4.mul(a, f4.inv(a)) == 1);
}

TEST_CASE("field axioms hold exhaustively for small q") {
    for (int q : {2, 3, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
        INFO("q = " << q);
        check_axioms_exhaustive(make_field(q));
    }
}

TEST_CASE("field axioms hold on random triples for larger q") {
    for (int q : {121, 128, 243, 256}) {
        INFO("q = " << q);
        auto f = make_field(q);
        SplitMix64 rng(static_cast<std::uint64_t>(q));
        for (int t = 0; t < 20000; ++t) {
            int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
            int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
            int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
    }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
    for (int q : {4, 8, 9, 13, 16, 27}) {
        INFO("q = " << q);
        auto f = make_field(q);
        bool has_generator = false;
        for (int a = 1; a < q; ++a) {
            int ord = multiplicative_order(f, a);
            CHECK((q - 1) % ord == 0);
            if (ord == q - 1) has_generator = true;
        }
        CHECK(has_generator);
    }
}

TEST_CASE("frobenius") {
    auto f9 = make_field(9);
    for (int a = 0; a < 9; ++a) CHECK(f9.frobenius(a, 0) == a);

    auto f7 = make_field(7);
    for (int a = 0; a < 7; ++a) CHECK(f7.frobenius(a, 0) == a);
    CHECK_THROWS_AS(f7.frobenius(1, 1), std::invalid_argument);

    // GF(4): x -> x^2 fixes the prime subfield and swaps the other two
    auto f4 = make_field(4);
    CHECK(f4.frobenius(0, 1) == 0);
    CHECK(f4.frobenius(1, 1) == 1);
    CHECK(f4.frobenius(2, 1) == 3);
    CHECK(f4.frobenius(3, 1) == 2);
}

TEST_CASE("frobenius is a field automorphism and has order k") {
    for (int q : {4, 8, 9, 16, 27}) {
        INFO("q = " << q);
        auto f = make_field(q);
        for (int j = 0; j < f.k; ++j) {
            for (int a = 0; a < q; ++a) {
                for (int b = 0; b < q; ++b) {
                    CHECK(f.frobenius(f.add(a, b), j) == f.add(f.frobenius(a, j), f.frobenius(b, j)));
                    CHECK(f.frobenius(f.mul(a, b), j) == f.mul(f.frobenius(a, j), f.frobenius(b, j)));
                }
            }
        }
        for (int a = 0; a < q; ++a) {
            int v = a;
            for (int t = 0; t < f.k; ++t) v = f.frobenius(v, 1 % f.k);
            if (f.k > 1) CHECK(v == a);  // k applications of x -> x^p
        }
    }
}
