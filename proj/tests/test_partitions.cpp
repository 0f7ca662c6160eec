#include <doctest.h>

#include <map>
#include <set>

#include "advlin/det.hpp"
#include "advlin/partition.hpp"

using namespace advlin;
using namespace advlin::parts;

TEST_CASE("set partition encoding") {
    SetPartition p = SetPartition::parse_rgs("1121");
    CHECK(p.blocks() == 2);
    CHECK(p.rgs_string() == "1121");
    CHECK(SetPartition::singletons(3).blocks() == 3);
    CHECK(SetPartition::one_block(4).blocks() == 1);
    CHECK_THROWS_AS(SetPartition({1, 0, 0}), DomainError);  // not restricted growth
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate(3, Category::P()).size() == 5);           // Bell(3)
    CHECK(enumerate(4, Category::P()).size() == 15);          // Bell(4)
    CHECK(enumerate(5, Category::P()).size() == 52);          // Bell(5)
    CHECK(enumerate(6, Category::NC2()).size() == 5);         // C_3
    CHECK(enumerate(4, Category::P2()).size() == 3);          // (4-1)!!
    CHECK(enumerate(6, Category::P2()).size() == 15);         // (6-1)!!
    CHECK(enumerate(4, Category::NC()).size() == 14);         // C_4
    CHECK(enumerate(3, Category::P2()).empty());              // odd
    CHECK(enumerate(4, Category::P_even()).size() == 4);
    CHECK(enumerate(1, Category::P_even()).empty());
}

TEST_CASE("matching categories respect colors") {
    // alternating word o b o b: matching pairings pair o with b
    ColoredWord w = parse_word("obob");
    CHECK(enumerate(w, Category::MatchingP2()).size() == 2);   // (1 2)(3 4), (1 4)(2 3)
    CHECK(enumerate(w, Category::MatchingNC2()).size() == 2);  // both are noncrossing
    ColoredWord w2 = parse_word("oobb");
    CHECK(enumerate(w2, Category::MatchingP2()).size() == 2);  // (1 3)(2 4), (1 4)(2 3)
    CHECK(enumerate(w2, Category::MatchingNC2()).size() == 1); // only the rainbow
    ColoredWord unbal = parse_word("ooob");
    CHECK(enumerate(unbal, Category::MatchingP2()).empty());
}

TEST_CASE("P_s membership") {
    // one block of 3 white points: needs 3 = 0 mod s
    SetPartition b3 = SetPartition::one_block(3);
    CHECK(in_category(b3, all_white(3), Category::P_s(3)));
    CHECK_FALSE(in_category(b3, all_white(3), Category::P_s(2)));
    CHECK_FALSE(in_category(b3, all_white(3), Category::P_s(0)));  // s = infinity
    // o b block balances at s = infinity
    SetPartition pair = SetPartition::one_block(2);
    CHECK(in_category(pair, parse_word("ob"), Category::P_s(0)));
    CHECK_FALSE(in_category(pair, parse_word("oo"), Category::P_s(0)));
}

TEST_CASE("join and order") {
    SetPartition singles = SetPartition::parse_rgs("12");
    SetPartition pair = SetPartition::parse_rgs("11");
    CHECK(leq(singles, pair));
    CHECK_FALSE(leq(pair, singles));
    CHECK(join(singles, pair) == pair);
    CHECK(join(singles, singles) == singles);
    // two crossing pairings of 4 join to the one-block partition
    SetPartition a = SetPartition::parse_rgs("1212");
    SetPartition b = SetPartition::parse_rgs("1221");
    CHECK(join(a, b) == SetPartition::one_block(4));
    // idempotence on a bigger example
    SetPartition c = SetPartition::parse_rgs("12132");
    CHECK(join(c, c) == c);
}

TEST_CASE("mobius values on P(2)") {
    SetPartition singles = SetPartition::parse_rgs("12");
    SetPartition pair = SetPartition::parse_rgs("11");
    CHECK(mobius(singles, singles) == 1);
    CHECK(mobius(singles, pair) == -1);
    CHECK(mobius(pair, singles) == 0);
}

TEST_CASE("mobius matrix inverts the order matrix exactly, k <= 5") {
    for (int k = 1; k <= 5; ++k) {
        auto parts = enumerate(k, Category::P());
        ZMat a = order_matrix(parts);
        ZMat m = mobius_matrix(parts);
        ZMat prod = m * a;
        CHECK(prod == ZMat::identity(parts.size()));
        // upper triangularity in the canonical order
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                CHECK(a(i, j) == 0);
                CHECK(m(i, j) == 0);
            }
    }
}

TEST_CASE("mobius closed form on full intervals") {
    // mu(0, 1) on P(m) is (-1)^{m-1} (m-1)!
    for (int m = 1; m <= 5; ++m) {
        long want = 1;
        for (int i = 1; i < m; ++i) want *= -i;
        CHECK(mobius(SetPartition::singletons(m), SetPartition::one_block(m)) == want);
    }
}

TEST_CASE("gram matrices") {
    SUBCASE("P(2) gram is [[N^2, N], [N, N]]") {
        ZMat g = gram(2, 5, Category::P());
        CHECK(g(0, 0) == 25);
        CHECK(g(0, 1) == 5);
        CHECK(g(1, 0) == 5);
        CHECK(g(1, 1) == 5);
    }
    SUBCASE("gram determinant product formula, k <= 5, N <= 10") {
        for (int k = 1; k <= 5; ++k) {
            auto parts = enumerate(k, Category::P());
            for (long n : {2L, 5L, 10L}) {
                BigInt want = 1;
                for (const auto& p : parts)
                    want *= falling_factorial(BigInt(n), static_cast<unsigned long>(p.blocks()));
                CHECK(det(gram(parts, n)) == want);
            }
        }
    }
    SUBCASE("k=2, N=3 determinant cross-check") {
        CHECK(det(gram(2, 3, Category::P())) == 18);
    }
    SUBCASE("gram factorization G = A L") {
        for (int k = 1; k <= 4; ++k) {
            auto parts = enumerate(k, Category::P());
            ZMat a = order_matrix(parts);
            ZMat l(parts.size(), parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = 0; j < parts.size(); ++j)
                    if (leq(parts[j], parts[i]))
                        l(i, j) = falling_factorial(BigInt(7), parts[i].blocks());
            CHECK(gram(parts, 7) == a * l);
        }
    }
}

TEST_CASE("weingarten") {
    SUBCASE("O_N k=2: single pairing, W = 1/N") {
        auto parts = enumerate(2, Category::P2());
        REQUIRE(parts.size() == 1);
        QMat w = weingarten(parts, 4);
        CHECK(w(0, 0) == BigRat(1, 4));
    }
    SUBCASE("S_N k=1: W = 1/N") {
        QMat w = weingarten(1, 7, Category::P());
        CHECK(w(0, 0) == BigRat(1, 7));
    }
    SUBCASE("W G = 1 exactly, k <= 4, N <= 8") {
        for (int k = 1; k <= 4; ++k)
            for (long n : {4L, 8L}) {
                auto parts = enumerate(k, Category::P());
                QMat prod = weingarten(parts, n) * to_qmat(gram(parts, n));
                CHECK(prod == QMat::identity(parts.size()));
            }
    }
    SUBCASE("singular gram is refused") {
        // P(3) at N = 1: all join counts give 1, gram is all-ones
        CHECK_THROWS_AS(weingarten(3, 1, Category::P()), RefusalError);
    }
}

TEST_CASE("truncated character moments") {
    // S_N, k=1: s/N
    CHECK(truncated_char_moment(Category::P(), 1, 9, 4) == BigRat(4, 9));
    // O_N, k=2: s/N
    CHECK(truncated_char_moment(Category::P2(), 2, 9, 4) == BigRat(4, 9));
    // s = N collapses to |D(k)|
    for (int k = 1; k <= 4; ++k) {
        auto sz = enumerate(k, Category::P()).size();
        CHECK(truncated_char_moment(Category::P(), k, 6, 6) == BigRat(static_cast<long>(sz)));
    }
    // S_N k=2 closed form s(s+N-2)/(N(N-1))
    BigRat want(5 * (5 + 10 - 2), 10 * 9);
    want.canonicalize();
    CHECK(truncated_char_moment(Category::P(), 2, 10, 5) == want);
}

TEST_CASE("asymptotic moments") {
    // P at k=2, t=1: 2 (Poisson second moment)
    CHECK(asymptotic_moment(Category::P(), 2, BigRat(1)) == 2);
    // P2 at k=2: t
    auto c = asymptotic_moment_coeffs(Category::P2(), 2);
    CHECK(c[1] == 1);
    CHECK(asymptotic_moment(Category::P2(), 2, BigRat(1, 3)) == BigRat(1, 3));
    // NC2 at k=4, t=1: C_2 = 2
    CHECK(asymptotic_moment(Category::NC2(), 4, BigRat(1)) == 2);
    // sum over NC(k) at t=1 is Catalan
    for (int k = 1; k <= 8; ++k)
        CHECK(asymptotic_moment(Category::NC(), k, BigRat(1)) == BigRat(catalan(k)));
}

TEST_CASE("catalan numbers") {
    std::vector<long> want{1, 1, 2, 5, 14, 42};
    for (int k = 0; k < 6; ++k) CHECK(catalan(k) == want[k]);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("tpi maps") {
    SUBCASE("semicircle cup sends 1 to sum e_i x e_i") {
        BiPartition cup{0, 2, SetPartition::one_block(2)};
        ZMat t = tpi_matrix(cup, 3);
        REQUIRE(t.rows() == 9);
        REQUIRE(t.cols() == 1);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t(3 * i + j, 0) -= (i == j ? 1 : 0);
        CHECK(t == ZMat(9, 1));
    }
    SUBCASE("cap after cup contracts to the scalar N") {
        BiPartition cup{0, 2, SetPartition::one_block(2)};
        BiPartition cap{2, 0, SetPartition::one_block(2)};
        auto comp = compose(cap, cup);
        CHECK(comp.closed_loops == 1);
        ZMat tc = tpi_matrix(cap, 3) * tpi_matrix(cup, 3);
        REQUIRE(tc.rows() == 1);
        CHECK(tc(0, 0) == 3);  // N^1 T_emptyset
    }
    SUBCASE("fork relation structure") {
        // one-block Y in P(2,1): (T_Y)_{i,jk} = delta_{ijk}
        BiPartition y{2, 1, SetPartition::one_block(3)};
        ZMat t = tpi_matrix(y, 2);
        REQUIRE(t.rows() == 2);
        REQUIRE(t.cols() == 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    CHECK(t(i, 2 * j + k) == ((i == j && j == k) ? 1 : 0));
    }
    SUBCASE("categorical laws on all pairs from P(<=3), N in {2,3,4}") {
        std::vector<BiPartition> all;
        for (int kin = 0; kin <= 3; ++kin)
            for (int lout = 0; kin + lout <= 3; ++lout)
                for (auto& bp : enumerate_bipartitions(kin, lout)) all.push_back(bp);
        for (int n : {2, 3, 4}) {
            for (const auto& a : all) {
                // adjoint law
                CHECK(tpi_matrix(adjoint_partition(a), n) == tpi_matrix(a, n).transpose());
                for (const auto& b : all) {
                    // tensor law
                    CHECK(tpi_matrix(tensor(a, b), n) ==
                          kron(tpi_matrix(a, n), tpi_matrix(b, n)));
                    // composition law when the middle symbols match
                    if (a.in_count == b.out_count) {
                        auto comp = compose(a, b);
                        ZMat lhs = tpi_matrix(a, n) * tpi_matrix(b, n);
                        ZMat rhs = tpi_matrix(comp.result, n);
                        BigInt scale = bigint_pow(BigInt(n), comp.closed_loops);
                        for (auto& e : rhs.data()) e *= scale;
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("fatten and shrink") {
    SUBCASE("NC(2) maps onto NC2(4)") {
        auto nc2 = enumerate(2, Category::NC());
        std::set<std::vector<int>> images;
        for (const auto& p : nc2) images.insert(fatten(p).block_of);
        auto targets = enumerate(4, Category::NC2());
        std::set<std::vector<int>> want;
        for (const auto& p : targets) want.insert(p.block_of);
        CHECK(images == want);
    }
    SUBCASE("one block of three fattens to rainbow-over-adjacent") {
        SetPartition p = SetPartition::one_block(3);
        SetPartition f = fatten(p);
        // pairs {1,6},{2,3},{4,5} in 1-based terms
        CHECK(f.block_of[0] == f.block_of[5]);
        CHECK(f.block_of[1] == f.block_of[2]);
        CHECK(f.block_of[3] == f.block_of[4]);
    }
    SUBCASE("shrink inverts fatten on all of NC(5)") {
        for (const auto& p : enumerate(5, Category::NC())) {
            SetPartition f = fatten(p);
            CHECK(in_category(f, all_white(10), Category::NC2()));
            CHECK(shrink(f) == p);
        }
    }
    SUBCASE("crossing input refused") {
        CHECK_THROWS_AS(fatten(SetPartition::parse_rgs("1212")), DomainError);
    }
    SUBCASE("|NC(k)| = C_k") {
        for (int k = 1; k <= 8; ++k)
            CHECK(BigInt(static_cast<long>(enumerate(k, Category::NC()).size())) == catalan(k));
    }
}

TEST_CASE("category closure under the partition operations") {
    // tensor (horizontal concatenation) keeps pairings pairings and
    // noncrossing partitions noncrossing; composition keeps pairings within
    // the category generated; adjoints are involutive.
    auto pair_cats = enumerate(2, Category::NC());
    for (const auto& a : pair_cats)
        for (const auto& b : pair_cats) {
            BiPartition ba{0, 2, a}, bb{0, 2, b};
            auto t = tensor(ba, bb);
            CHECK(noncrossing(t.part));
        }
    for (int kin = 0; kin <= 2; ++kin)
        for (int lout = 0; lout <= 2 - kin; ++lout)
            for (auto& bp : enumerate_bipartitions(kin, lout))
                CHECK(adjoint_partition(adjoint_partition(bp)).part == bp.part);
}
