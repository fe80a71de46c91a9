#include <doctest.h>

#include <random>

#include "mwb/geometry.hpp"
#include "mwb/matroid.hpp"
#include "oracles.hpp"

using namespace mwb;

namespace {

// Every subset of a ground set up to 20 elements.
template <class F>
void for_all_subsets(int n, F f) {
    REQUIRE(n <= 20);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        IndexSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.add(i);
        f(s);
    }
}

void check_rank_axioms(const Matroid& M) {
    int n = M.size();
    REQUIRE(n <= 8);
    CHECK(M.rank(IndexSet{}) == 0);
    for_all_subsets(n, [&](const IndexSet& X) {
        int rX = M.rank(X);
        CHECK(rX >= 0);
        CHECK(rX <= X.size());
        for (int e = 0; e < n; ++e) {
            if (X.contains(e)) continue;
            IndexSet Y = X;
            Y.add(e);
            int rY = M.rank(Y);
            CHECK(rY >= rX);
            CHECK(rY <= rX + 1);
        }
    });
    // Submodularity on all pairs.
    for_all_subsets(n, [&](const IndexSet& X) {
        for_all_subsets(n, [&](const IndexSet& Y) {
            CHECK(M.rank(X) + M.rank(Y) >= M.rank(X | Y) + M.rank(X & Y));
        });
    });
}

}  // namespace

TEST_CASE("uniform matroid ranks") {
    auto u24 = uniform_matroid(2, 4);
    CHECK(u24->rank(IndexSet{0, 1, 2}) == 2);
    CHECK(u24->rank(IndexSet{}) == 0);
    CHECK(u24->full_rank() == 2);
}

TEST_CASE("linear rank by elimination matches the brute-force oracle") {
    auto fano = pg(3, 2);
    CHECK(fano->full_rank() == 3);
    for_all_subsets(fano->size(), [&](const IndexSet& X) {
        CHECK(fano->rank(X) == oracle::brute_rank(*fano, X));
    });

    // Random GF(3) matrix, 10 columns.
    auto f3 = FieldSpec::make(3, 1);
    std::mt19937_64 rng(11);
    std::vector<std::vector<FieldElement>> cols;
    for (int i = 0; i < 10; ++i) {
        std::vector<FieldElement> c(4);
        for (auto& x : c) x = static_cast<int>(rng() % 3);
        cols.push_back(c);
    }
    LinearMatroid m(f3, 4, cols);
    std::mt19937_64 rng2(13);
    for (int trial = 0; trial < 200; ++trial) {
        IndexSet X;
        for (int i = 0; i < 10; ++i)
            if (rng2() & 1) X.add(i);
        CHECK(m.rank(X) == oracle::brute_rank(m, X));
    }
}

TEST_CASE("rank axioms hold exhaustively on small constructions") {
    check_rank_axioms(*pg(3, 2));
    check_rank_axioms(*ag(3, 2));
    check_rank_axioms(*uniform_matroid(2, 4));
    check_rank_axioms(*direct_sum(uniform_matroid(2, 4), uniform_matroid(1, 1)));
    check_rank_axioms(*minor(pg(3, 2), IndexSet{0}, IndexSet{1}));
}

TEST_CASE("closure") {
    auto fano = pg(3, 2);
    CHECK(fano->closure(IndexSet{0, 1}) == IndexSet{0, 1, 2});  // the Fano line through them
    CHECK(fano->closure(fano->ground()) == fano->ground());
    // Fast linear closure equals the generic definition.
    for_all_subsets(fano->size(), [&](const IndexSet& X) {
        CHECK(fano->closure(X) == fano->Matroid::closure(X));
    });
}

TEST_CASE("flats enumeration") {
    auto fano = pg(3, 2);
    auto points = flats_of_rank(*fano, 1);
    REQUIRE(points.size() == 7);
    for (int i = 0; i < 7; ++i) CHECK(points[i] == IndexSet{i});

    auto lines = flats_of_rank(*fano, 2);
    CHECK(lines.size() == 7);
    for (const auto& l : lines) CHECK(l.size() == 3);

    CHECK_THROWS_AS(flats_of_rank(*fano, 4), std::invalid_argument);
}

TEST_CASE("minors") {
    auto fano = pg(3, 2);
    auto contracted = minor(fano, IndexSet{0}, IndexSet{});
    CHECK(contracted->full_rank() == 2);
    CHECK(epsilon(*contracted) == 3);
    CHECK(oracle::brute_epsilon(*contracted) == 3);

    // Restriction to the full ground set is the identity.
    auto same = restriction(fano, fano->ground());
    CHECK(rank_tables_equal(*fano, *same));

    // U_{3,5} / {0} is U_{2,4}.
    auto u35 = uniform_matroid(3, 5);
    auto contracted2 = minor(u35, IndexSet{0}, IndexSet{});
    CHECK(rank_tables_equal(*contracted2, *uniform_matroid(2, 4)));

    CHECK_THROWS_AS(minor(fano, IndexSet{0}, IndexSet{0}), std::invalid_argument);
    CHECK_THROWS_AS(fano->rank(IndexSet{9}), std::out_of_range);
}

TEST_CASE("views of views flatten to a single pair") {
    auto fano = pg(3, 2);
    auto v1 = minor(fano, IndexSet{0}, IndexSet{1});
    auto v2 = minor(v1, IndexSet{0}, IndexSet{1});  // view coordinates
    auto mv = std::dynamic_pointer_cast<const MinorView>(v2);
    REQUIRE(mv);
    CHECK(mv->base().get() == fano.get());
    // Same answers as contracting/deleting in one step.
    IndexSet c = mv->contracted(), d = mv->deleted();
    auto flat = minor(fano, c, d);
    CHECK(rank_tables_equal(*v2, *flat));

    // Contraction of a dependent set is permitted.
    auto dep = minor(fano, IndexSet{0, 1, 2}, IndexSet{});  // a full line, rank 2
    CHECK(dep->full_rank() == 1);
    for_all_subsets(dep->size(), [&](const IndexSet& X) {
        auto mvd = std::dynamic_pointer_cast<const MinorView>(dep);
        IndexSet base_x = mvd->to_base(X);
        CHECK(dep->rank(X) == fano->rank(base_x | IndexSet{0, 1, 2}) - 2);
    });
}

TEST_CASE("simplify and epsilon") {
    CHECK(epsilon(*uniform_matroid(2, 4)) == 4);
    CHECK(epsilon(*pg(3, 2)) == 7);  // (2^3 - 1)/(2 - 1) by enumeration

    // Zero column and duplicate column collapse.
    auto f2 = FieldSpec::make(2, 1);
    LinearMatroid m(f2, 2, {{1, 0}, {1, 0}, {0, 0}, {0, 1}, {1, 1}});
    auto s = simplify(m);
    CHECK(s.loops == IndexSet{2});
    CHECK(epsilon(m) == 3);
    CHECK(oracle::brute_epsilon(m) == 3);
    CHECK(s.classes[0] == IndexSet{0, 1});
    CHECK(s.class_of[1] == 0);
    CHECK(s.class_of[2] == -1);
    CHECK(s.representatives == std::vector<int>{0, 3, 4});
}

TEST_CASE("local connectivity") {
    auto m = pg(4, 2);
    // Two skew coordinate lines in rank 4: {e1,e2,e1+e2} and {e3,e4,e3+e4}.
    // Column order is lexicographic: find them by coordinates.
    auto col_index = [&](std::vector<FieldElement> v) {
        for (int i = 0; i < m->size(); ++i)
            if (m->column(i) == v) return i;
        return -1;
    };
    IndexSet line1{col_index({1, 0, 0, 0}), col_index({0, 1, 0, 0}), col_index({1, 1, 0, 0})};
    IndexSet line2{col_index({0, 0, 1, 0}), col_index({0, 0, 0, 1}), col_index({0, 0, 1, 1})};
    CHECK(local_connectivity(*m, line1, line2) == 0);
    CHECK(local_connectivity(*m, line1, line1) == m->rank(line1));

    auto fano = pg(3, 2);
    auto lines = flats_of_rank(*fano, 2);
    CHECK(local_connectivity(*fano, lines[0], lines[1]) == 1);  // lines of a plane meet
}

TEST_CASE("direct sums") {
    auto s = direct_sum(uniform_matroid(2, 4), uniform_matroid(2, 4));
    CHECK(s->full_rank() == 4);
    CHECK(epsilon(*s) == 8);

    auto empty = uniform_matroid(0, 0);
    auto fano = pg(3, 2);
    auto se = direct_sum(fano, empty);
    CHECK(se->size() == 7);
    CHECK(rank_tables_equal(*se, *fano));

    CHECK(direct_sum(fano, uniform_matroid(1, 1))->full_rank() == 4);
}

TEST_CASE("bases matroid validates the exchange axiom") {
    // {{0,1},{2,3}} violates exchange.
    CHECK_THROWS_AS(BasesMatroid(4, {IndexSet{0, 1}, IndexSet{2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(BasesMatroid(4, {IndexSet{0, 1}, IndexSet{1, 2, 3}}), std::invalid_argument);
    CHECK_NOTHROW(BasesMatroid(4, {IndexSet{0, 1}, IndexSet{0, 2}, IndexSet{1, 2}}));

    auto u = uniform_matroid(2, 4);
    auto bm = std::dynamic_pointer_cast<const BasesMatroid>(u);
    BasesMatroid revalidated(4, bm->bases());
    CHECK(revalidated.exchange_fully_validated());
    CHECK(rank_tables_equal(revalidated, *u));
}

TEST_CASE("contraction flat counting stays consistent with epsilon") {
    // eps(M) <= sum over rank-(r(C)+1) flats F containing C of eps(M|F).
    auto fano = pg(3, 2);
    for (const IndexSet& C : {IndexSet{}, IndexSet{0}, IndexSet{1, 2}}) {
        int rc = fano->rank(C);
        if (rc + 1 > fano->full_rank()) continue;
        long long sum = 0;
        for (const auto& F : flats_of_rank_containing(*fano, rc + 1, fano->closure(C)))
            sum += epsilon(*restriction(fano, F));
        CHECK(sum >= epsilon(*fano));
    }
}
