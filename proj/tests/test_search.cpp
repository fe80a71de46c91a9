#include <doctest.h>

#include "mwb/geometry.hpp"
#include "mwb/matroid_io.hpp"
#include "mwb/search.hpp"
#include "oracles.hpp"

using namespace mwb;

TEST_CASE("restriction of an isomorphic host is the identity witness") {
    auto host = ag(3, 2);
    auto res = find_restriction(*host, *uniform_matroid(3, 4));
    REQUIRE(res.outcome == Outcome::Found);
    CHECK(res.witness->map == std::vector<int>{0, 1, 2, 3});
    CHECK(verify_restriction(*host, *uniform_matroid(3, 4), *res.witness));
}

TEST_CASE("binary host has no 4-point line restriction") {
    auto res = find_restriction(*pg(3, 2), *uniform_matroid(2, 4));
    CHECK(res.outcome == Outcome::None);
    CHECK_FALSE(oracle::brute_least_restriction_image(*pg(3, 2), *uniform_matroid(2, 4)));
}

TEST_CASE("affine plane inside the Fano plane: complement of a line") {
    auto host = pg(3, 2);
    auto res = find_restriction(*host, *ag(3, 2));
    REQUIRE(res.outcome == Outcome::Found);
    auto brute = oracle::brute_least_restriction_image(*host, *ag(3, 2));
    REQUIRE(brute);
    CHECK(res.witness->sorted_image() == *brute);
    CHECK(res.witness->sorted_image() == std::vector<int>{0, 1, 3, 6});
    // The complement {2,4,5} is a Fano line.
    CHECK(host->rank(IndexSet{2, 4, 5}) == 2);
}

TEST_CASE("search matches brute force on small hosts and targets") {
    std::vector<MatroidPtr> hosts = {pg(3, 2), ag(3, 3), uniform_matroid(3, 6),
                                     direct_sum(uniform_matroid(2, 4), uniform_matroid(2, 3)),
                                     minor(pg(4, 2), IndexSet{0}, IndexSet{1, 2})};
    std::vector<MatroidPtr> targets = {uniform_matroid(1, 1), uniform_matroid(2, 3),
                                       uniform_matroid(2, 4), uniform_matroid(3, 4),
                                       uniform_matroid(3, 5)};
    for (const auto& h : hosts) {
        for (const auto& t : targets) {
            if (t->size() > h->size() || t->full_rank() > h->full_rank()) continue;
            auto res = find_restriction(*h, *t);
            auto brute = oracle::brute_least_restriction_image(*h, *t);
            if (brute) {
                REQUIRE(res.outcome == Outcome::Found);
                CHECK(res.witness->sorted_image() == *brute);
            } else {
                CHECK(res.outcome == Outcome::None);
            }
        }
    }
}

TEST_CASE("monotonicity: restrictions survive growing the host") {
    auto small = pg(3, 2);
    auto big = direct_sum(small, uniform_matroid(1, 1));
    for (const auto& t : {uniform_matroid(3, 4), uniform_matroid(2, 3)}) {
        auto a = find_restriction(*small, *t);
        REQUIRE(a.outcome == Outcome::Found);
        auto b = find_restriction(*big, *t);
        CHECK(b.outcome == Outcome::Found);
    }
}

TEST_CASE("budget exhaustion is inconclusive, not none") {
    SearchOptions opts;
    opts.node_budget = 2;
    auto res = find_restriction(*pg(4, 2), *ag(3, 2), opts);
    CHECK(res.outcome == Outcome::Inconclusive);
    CHECK_FALSE(res.witness);
}

TEST_CASE("non-simple targets are rejected") {
    auto f2 = FieldSpec::make(2, 1);
    auto dup = std::make_shared<LinearMatroid>(
        f2, 2, std::vector<std::vector<FieldElement>>{{1, 0}, {1, 0}});
    CHECK_THROWS_AS(find_restriction(*pg(3, 2), *dup), std::invalid_argument);
}

TEST_CASE("line minors") {
    auto u24 = uniform_matroid(2, 4);
    auto res = has_u2_minor(*u24, 4);
    REQUIRE(res.outcome == Outcome::Found);
    CHECK(res.witness->contract.empty());
    CHECK(res.witness->inner.map == std::vector<int>{0, 1, 2, 3});

    CHECK(has_u2_minor(*pg(4, 2), 4).outcome == Outcome::None);

    auto u35 = uniform_matroid(3, 5);
    auto res2 = has_u2_minor(*u35, 4);
    REQUIRE(res2.outcome == Outcome::Found);
    CHECK(res2.witness->contract == IndexSet{0});
    CHECK(verify_minor_witness(*u35, *uniform_matroid(2, 4), *res2.witness));

    CHECK_THROWS_AS(has_u2_minor(*u24, 2), std::invalid_argument);
}

TEST_CASE("representability by embedding") {
    auto no = is_representable(*uniform_matroid(2, 4), 2, 2);
    CHECK(no.kind == RepresentabilityResult::NotRepresentable);

    auto yes = is_representable(*uniform_matroid(2, 4), 3, 2);
    REQUIRE(yes.kind == RepresentabilityResult::Representable);
    CHECK(yes.embedding.size() == 4);

    // An abstract copy of the Fano plane is binary.
    auto fano_abstract = mwb::to_bases(*pg(3, 2));
    auto fy = is_representable(*fano_abstract, 2, 3);
    CHECK(fy.kind == RepresentabilityResult::Representable);

    // The line-length law: U_{2,m} is GF(q)-representable iff m <= q+1.
    for (int q : {2, 3, 4, 5})
        for (int m = 2; m <= 8; ++m) {
            auto r = is_representable(*uniform_matroid(2, m), q, 2);
            CHECK((r.kind == RepresentabilityResult::Representable) == (m <= q + 1));
        }

    CHECK(is_representable(*pg(3, 2), 2, 4, {5, 4}).kind == RepresentabilityResult::Refused);
    CHECK(is_representable(*pg(3, 2), 2, 5).kind == RepresentabilityResult::Refused);
    CHECK_THROWS_AS(is_representable(*pg(3, 2), 2, 2), std::invalid_argument);
}

TEST_CASE("projective geometry minors") {
    auto res = find_pg_minor(*pg(4, 2), 3, 2);
    REQUIRE(res.outcome == Outcome::Found);
    CHECK(res.witness->contract.empty());
    CHECK(verify_minor_witness(*pg(4, 2), *pg(3, 2), *res.witness));

    CHECK(find_pg_minor(*uniform_matroid(3, 6), 3, 2).outcome == Outcome::None);

    auto single = find_pg_minor(*uniform_matroid(2, 4), 1, 2);
    REQUIRE(single.outcome == Outcome::Found);
    CHECK(single.witness->inner.map == std::vector<int>{0});

    SearchOptions opts;
    opts.node_budget = 1;
    CHECK(find_pg_minor(*pg(4, 2), 3, 2, opts).outcome == Outcome::Inconclusive);
}

TEST_CASE("to_bases round-trips rank behaviour") {
    auto fano = pg(3, 2);
    auto b = mwb::to_bases(*fano);
    CHECK(rank_tables_equal(*fano, *b));
}
