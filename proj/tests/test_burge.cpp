#include <catch2/catch_amalgamated.hpp>

#include "qburge/burge.hpp"

using namespace qburge;

TEST_CASE("column insertion") {
    auto r = column_insert(SSYTableau{{2}, {3}}, 1);
    CHECK(r.tableau == SSYTableau{{1, 2}, {3}});
    CHECK(r.row == 1);
    CHECK(r.col == 2);

    auto s = column_insert(SSYTableau{}, 4);
    CHECK(s.tableau == SSYTableau{{4}});
    CHECK(s.row == 1);
    CHECK(s.col == 1);

    // the nine-step trace: 2, 2, 1, 3, 2, 3, 3, 2, 1
    SSYTableau t;
    for (int v : {2, 2, 1, 3, 2, 3, 3, 2, 1}) t = column_insert(t, v).tableau;
    CHECK(t == SSYTableau{{1, 1, 2, 2, 2}, {2, 3, 3}, {3}});
}

TEST_CASE("burge forward fixtures") {
    auto pq = burge_forward(IntMat({{1, 0, 1}, {2, 1, 1}, {0, 1, 2}}));
    CHECK(pq.P == SSYTableau{{1, 1, 2, 2, 2}, {2, 3, 3}, {3}});
    CHECK(pq.Q == SSYTableau{{1, 1, 1, 3, 3}, {2, 2, 3}, {3}});

    auto id2 = burge_forward(IntMat({{1, 0}, {0, 1}}));
    CHECK(id2.P == SSYTableau{{1}, {2}});
    CHECK(id2.Q == SSYTableau{{1}, {2}});
    auto anti = burge_forward(IntMat({{0, 1}, {1, 0}}));
    CHECK(anti.P == SSYTableau{{1, 2}});
    CHECK(anti.Q == SSYTableau{{1, 2}});

    auto zero = burge_forward(IntMat(2, 3));
    CHECK(zero.P == SSYTableau{});
    CHECK(zero.Q == SSYTableau{});
}

TEST_CASE("burge inverse fixtures") {
    IntMat m({{1, 0, 1}, {2, 1, 1}, {0, 1, 2}});
    CHECK(burge_inverse(burge_forward(m)) == m);
    CHECK(burge_inverse({SSYTableau{}, SSYTableau{}}) == IntMat(1, 1));
    CHECK_THROWS(burge_inverse({SSYTableau{{1, 1}}, SSYTableau{{1}, {2}}}));
}

TEST_CASE("bijectivity, transpose symmetry, contents") {
    for (int n = 0; n <= 6; ++n)
        for (const Composition& alpha : positive_compositions_of(n))
            for (const Composition& beta : positive_compositions_of(n)) {
                std::set<std::pair<SSYTableau, SSYTableau>> images;
                for (const IntMat& m : enumerate_matrices(alpha, beta)) {
                    BurgePair pq = burge_forward(m);
                    CHECK(pq.P.shape() == pq.Q.shape());
                    if (n > 0) {
                        CHECK(pq.P.content(alpha.length()) == alpha);
                        CHECK(pq.Q.content(beta.length()) == beta);
                    }
                    CHECK(images.emplace(pq.P, pq.Q).second);  // injective
                    // two-sided inverse
                    IntMat back = burge_inverse(pq);
                    if (n > 0)
                        CHECK(back == m);
                    else
                        CHECK(back.total() == 0);
                    // transpose symmetry P(M^t) = Q(M)
                    BurgePair tp = burge_forward(m.transpose());
                    CHECK(tp.P == pq.Q);
                    CHECK(tp.Q == pq.P);
                }
                // surjective onto pairs of the right contents
                std::size_t expected = 0;
                for (const Partition& lam : partitions_of(n))
                    expected += ssyt_enumerate(lam, alpha).size() * ssyt_enumerate(lam, beta).size();
                CHECK(images.size() == expected);
                // and the recorded round trip from the tableau side
                for (const auto& [pt, qt] : images) {
                    BurgePair again = burge_forward(burge_inverse({pt, qt}));
                    CHECK(again.P == pt);
                    CHECK(again.Q == qt);
                }
            }
}
