#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qburge/flags.hpp"

using namespace qburge;

TEST_CASE("rank") {
    CHECK(rank(GFMatrix::identity(7, 4)) == 4);
    CHECK(rank(GFMatrix(3, 3, 3)) == 0);
    GFMatrix m(5, {{1, -1, 0}, {1, -1, 0}, {1, -1, 0}});
    CHECK(rank(m) == 1);
}

TEST_CASE("construction guards") {
    CHECK_THROWS(GFMatrix(4, 2, 2));  // 4 is not prime
    CHECK_THROWS(GFMatrix(1, 2, 2));
    GFMatrix m(5, {{-1, 6}, {11, -7}});
    CHECK(m.at(0, 0) == 4);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(1, 1) == 3);
}

TEST_CASE("jordan partitions") {
    CHECK(jordan_partition(GFMatrix(5, 3, 3)) == Partition{3});
    CHECK(jordan_partition(GFMatrix(5, {{1, -1, 0}, {1, -1, 0}, {1, -1, 0}})) == Partition{2, 1});
    for (int n = 1; n <= 5; ++n) {
        GFMatrix jn = jordan_representative(3, Partition{std::vector<int>(n, 1)});
        CHECK(jordan_partition(jn) == Partition{std::vector<int>(n, 1)});
    }
    CHECK_THROWS(jordan_partition(GFMatrix::identity(2, 3)));
    for (int p : {2, 3, 5})
        for (int n = 0; n <= 5; ++n)
            for (const Partition& lam : partitions_of(n))
                CHECK(jordan_partition(jordan_representative(p, lam)) == lam);
}

TEST_CASE("conjugation invariance of the Jordan form") {
    std::mt19937 rng(0);
    for (int trial = 0; trial < 200; ++trial) {
        int p = (trial % 2) ? 2 : 3;
        int n = 1 + trial % 4;
        auto lams = partitions_of(n);
        const Partition& lam = lams[trial % lams.size()];
        GFMatrix nil = jordan_representative(p, lam);
        GFMatrix g = random_invertible(p, n, rng);
        CHECK(jordan_partition(g * nil * inverse(g)) == lam);
    }
}

TEST_CASE("restrict") {
    GFMatrix n(7, {{0, 0, 1, 6, -4, 2},
                   {0, 0, 3, -2, 7, 5},
                   {0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0, 0}});
    CHECK(restrict(n, Subspace::full(7, 6)) == n);
    // restriction to the kernel is zero
    {
        GFMatrix j2 = jordan_representative(5, Partition{1, 1});  // single 2-block
        Subspace ker = Subspace::span(GFMatrix(5, {{1}, {0}}));
        CHECK(restrict(j2, ker).is_zero());
    }
    // first three coordinates of the 6x6 example
    GFMatrix e123(7, 6, 3);
    e123.at(0, 0) = e123.at(1, 1) = e123.at(2, 2) = 1;
    CHECK(jordan_partition(restrict(n, Subspace::span(e123))) == Partition{2, 1});
    // non-invariant subspace
    GFMatrix e3(7, 6, 1);
    e3.at(2, 0) = 1;
    CHECK_THROWS(restrict(n, Subspace::span(e3)));
}

TEST_CASE("subspace canonical form") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int p = (trial % 2) ? 2 : 5;
        int nn = 2 + trial % 4, d = 1 + trial % nn;
        GFMatrix b = random_matrix(p, nn, d, rng);
        Subspace s = Subspace::span(b);
        // change of basis does not change the subspace
        GFMatrix c = random_invertible(p, s.dim(), rng);
        CHECK(Subspace::span(s.basis() * c) == s);
        for (int col = 0; col < s.dim(); ++col) {
            std::vector<int> v(nn);
            for (int r = 0; r < nn; ++r) v[r] = b.at(r, col % b.cols());
            CHECK(s.contains(v));
        }
    }
    // enumeration counts match the Grassmannian formula
    for (int p : {2, 3})
        for (int m = 0; m <= 4; ++m)
            for (int d = 0; d <= m; ++d) {
                long long cnt = 0;
                for_each_subspace_basis(p, m, d, [&](const GFMatrix&) { ++cnt; });
                CHECK(Fraction(cnt) == grassmannian_count(d, m).eval(Fraction(1, p)));
            }
}

TEST_CASE("nilpotent census vs closed formula") {
    CHECK(nilpotent_census(2, 2, Partition{1, 1}) == 3);
    for (int p : {2, 3, 5}) CHECK(nilpotent_census(2, p, Partition{2}) == 1);
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n) {
            long long total = 0;
            for (const Partition& lam : partitions_of(n)) {
                long long census = nilpotent_census(n, p, lam);
                CHECK(Fraction(census) == nilpotent_count_formula(n, lam).eval(Fraction(1, p)));
                total += census;
            }
            // Fine-Herstein: p^{n^2 - n} nilpotents in total
            long long expected = 1;
            for (int i = 0; i < n * n - n; ++i) expected *= p;
            CHECK(total == expected);
        }
    CHECK_THROWS(nilpotent_census(4, 3, Partition{4}));  // 3^16 over the guard
}

TEST_CASE("stabilizer size formula") {
    // lambda = (n): N = 0, stabilizer is all of GL_n
    for (int n = 1; n <= 5; ++n) CHECK(stabilizer_size_formula(Partition{n}) == gl_count(n));
    // regular nilpotent: centralizer of J_3 over GF(2) by brute force
    {
        GFMatrix j3 = jordan_representative(2, Partition{1, 1, 1});
        long long cnt = 0;
        for (int bits = 0; bits < 512; ++bits) {
            GFMatrix g(2, 3, 3);
            for (int i = 0; i < 9; ++i) g.at(i / 3, i % 3) = (bits >> i) & 1;
            if (is_invertible(g) && g * j3 == j3 * g) ++cnt;
        }
        CHECK(cnt == 4);  // (p-1) p^{n-1}
        CHECK(stabilizer_size_formula(Partition{1, 1, 1}).eval(Fraction(1, 2)) == cnt);
    }
    // orbit-stabilizer cross-check at a prime
    CHECK(stabilizer_size_formula(Partition{2, 1}).eval(Fraction(1, 2)) ==
          gl_count(3).eval(Fraction(1, 2)) / Fraction(nilpotent_census(3, 2, Partition{2, 1})));
    // and as an identity of rational functions, for all shapes
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(nilpotent_count_formula(n, lam) * stabilizer_size_formula(lam) == gl_count(n));
}
