#include <doctest.h>

#include "mwb/geometry.hpp"
#include "mwb/matroid.hpp"
#include "oracles.hpp"

using namespace mwb;

TEST_CASE("pg(3,2) is the Fano plane") {
    auto fano = pg(3, 2);
    CHECK(fano->size() == 7);
    CHECK(fano->full_rank() == 3);
    CHECK(is_simple(*fano));
    for (const auto& line : flats_of_rank(*fano, 2)) CHECK(line.size() == 3);
}

TEST_CASE("small projective geometries") {
    CHECK(pg(1, 2)->size() == 1);
    CHECK(pg(1, 5)->size() == 1);

    auto line4 = pg(2, 3);
    CHECK(line4->size() == 4);  // (3^2 - 1)/2
    CHECK(line4->full_rank() == 2);
    CHECK(rank_tables_equal(*line4, *uniform_matroid(2, 4)));
}

TEST_CASE("small affine geometries") {
    auto a = ag(3, 2);
    CHECK(a->size() == 4);
    CHECK(a->full_rank() == 3);
    // No 3 collinear: brute-force rank table comparison with U_{3,4}.
    CHECK(rank_tables_equal(*a, *uniform_matroid(3, 4)));
    for (int i = 0; i < 4; ++i)
        CHECK(a->rank(IndexSet{0, 1, 2, 3} - IndexSet{i}) == 3);

    auto b = ag(2, 3);
    CHECK(b->size() == 3);  // q^{m-1}
    CHECK(rank_tables_equal(*b, *uniform_matroid(2, 3)));

    CHECK(ag(1, 2)->size() == 1);
    CHECK(ag(1, 4)->size() == 1);
}

TEST_CASE("point counts match the geometric series") {
    for (int q : {2, 3, 4, 5, 8, 9}) {
        for (int m = 1; m <= 6; ++m) {
            GeometryTag tp{GeometryTag::PG, m, q};
            if (tp.point_count() > 2000) continue;
            CHECK(pg(m, q)->size() == tp.point_count());
            GeometryTag ta{GeometryTag::AG, m, q};
            CHECK(ag(m, q)->size() == ta.point_count());
            CHECK(ag(m, q)->full_rank() == m);
        }
    }
}

TEST_CASE("ag is pg minus a rank-(m-1) flat and its lines carry q points") {
    for (int q : {2, 3}) {
        for (int m = 2; m <= 3; ++m) {
            auto P = pg(m, q);
            // Deleted points: first coordinate zero.
            IndexSet removed;
            for (int i = 0; i < P->size(); ++i)
                if (P->column(i)[0] == 0) removed.add(i);
            CHECK(P->rank(removed) == m - 1);
            CHECK(P->closure(removed) == removed);
            CHECK(P->size() - removed.size() == ag(m, q)->size());

            auto A = ag(m, q);
            if (A->full_rank() >= 2)
                for (const auto& line : flats_of_rank(*A, 2)) CHECK(line.size() == q);
        }
    }
}

TEST_CASE("geometry construction is deterministic and canonical") {
    auto a = pg(3, 2), b = pg(3, 2);
    REQUIRE(a->size() == b->size());
    for (int i = 0; i < a->size(); ++i) CHECK(a->column(i) == b->column(i));
    // Canonical representatives: first nonzero coordinate is 1, lexicographic order.
    for (int i = 0; i < a->size(); ++i) {
        const auto& col = a->column(i);
        int lead = 0;
        while (col[lead] == 0) ++lead;
        CHECK(col[lead] == 1);
        if (i > 0) CHECK(std::lexicographical_compare(a->column(i - 1).begin(),
                                                      a->column(i - 1).end(), col.begin(),
                                                      col.end()));
    }
}

TEST_CASE("geometry tags parse and print") {
    auto t = GeometryTag::parse("pg:3:2");
    CHECK(t.family == GeometryTag::PG);
    CHECK(t.rank == 3);
    CHECK(t.q == 2);
    CHECK(t.str() == "pg:3:2");
    CHECK(GeometryTag::parse("ag:4:3").point_count() == 27);
    CHECK_THROWS_AS(GeometryTag::parse("xy:1:2"), std::invalid_argument);
    CHECK_THROWS_AS(pg(2, 6), std::invalid_argument);
}
