#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"

#include "galcore/error.hpp"
#include "galcore/galois.hpp"
#include "galcore/oracle.hpp"
#include "galcore/ordering.hpp"

using namespace galcore;

TEST_CASE("chain example connections are valid under both definitions") {
    fixtures::Chains ex;
    CHECK(validate_gc(ex.first).ok());
    CHECK(validate_gc(ex.second).ok());
    CHECK(validate_gc_adjoint(ex.first).ok());
    CHECK(validate_gc_adjoint(ex.second).ok());
}

TEST_CASE("constant-to-top maps form a connection") {
    const auto d = share(diamond());
    const auto c = share(chain(3));
    CHECK(validate_gc(GaloisConnection{d, c, {2, 2, 2, 2}, {3, 3, 3}}).ok());
}

TEST_CASE("identity pair on a 2-chain is rejected") {
    const auto c = share(chain(2));
    const GaloisConnection gc{c, c, {0, 1}, {0, 1}};
    const auto r = validate_gc(gc);
    CHECK(r.has("f-antitone"));
    CHECK(r.has("g-antitone"));
    CHECK_FALSE(validate_gc_adjoint(gc).ok());
}

TEST_CASE("adjoint definition fails with a witness when g collapses to bottom") {
    const auto c = share(chain(3));
    const GaloisConnection gc{c, c, {2, 1, 0}, {0, 0, 0}};
    CHECK(is_antitone(gc.f()));
    const auto r = validate_gc_adjoint(gc);
    REQUIRE_FALSE(r.ok());
    CHECK(r.has("adjunction"));
    CHECK(r.violations().front().witness.size() == 2);
    CHECK_FALSE(validate_gc(gc).ok());
}

TEST_CASE("constructor checks table shapes") {
    const auto c = share(chain(2));
    CHECK_THROWS_AS(GaloisConnection(c, c, {0}, {0, 1}), DimensionMismatch);
    CHECK_THROWS_AS(GaloisConnection(c, c, {0, 5}, {0, 1}), DimensionMismatch);
}

TEST_CASE("nodes of the chain example") {
    fixtures::Chains ex;
    // values 1 and 3 on P
    CHECK(nodes(ex.first, Side::P) == std::vector<Element>{0, 2});
    CHECK(image(ex.first, Side::P) == std::vector<Element>{0, 2});
    // values 2 and 4 on Q
    CHECK(nodes(ex.first, Side::Q) == std::vector<Element>{1, 3});
}

TEST_CASE("nodes of the constant-to-top connection and of a perfect connection") {
    const auto d = share(diamond());
    const GaloisConnection top{d, d, {3, 3, 3, 3}, {3, 3, 3, 3}};
    CHECK(nodes(top, Side::P) == std::vector<Element>{3});
    CHECK(nodes(top, Side::Q) == std::vector<Element>{3});
    fixtures::Diamonds ex;
    CHECK(nodes(ex.fixing, Side::P) == std::vector<Element>{0, 1, 2, 3});
}

TEST_CASE("leaves of the chain example") {
    fixtures::Chains ex;
    const auto lp = leaves(ex.first, Side::P);
    REQUIRE(lp.leaves.size() == 2);
    // ascending by node: {1} with node 1, then {2,3} with node 3
    CHECK(lp.leaves[0] == std::vector<Element>{0});
    CHECK(lp.leaves[1] == std::vector<Element>{1, 2});
    CHECK(lp.node_of_leaf == std::vector<Element>{0, 2});
    CHECK(lp.leaf_of == std::vector<std::size_t>{0, 1, 1});
    CHECK(lp.leaf_order.leq(0, 1));
    CHECK_FALSE(lp.leaf_order.leq(1, 0));

    const auto lq = leaves(ex.first, Side::Q);
    REQUIRE(lq.leaves.size() == 2);
    CHECK(lq.leaves[0] == std::vector<Element>{0, 1});
    CHECK(lq.leaves[1] == std::vector<Element>{2, 3});
}

TEST_CASE("leaf correspondence of the chain example") {
    fixtures::Chains ex;
    const auto corr = leaf_antiiso(ex.first);
    // leaf {2,3} goes to the leaf of 2 = {1,2}; leaf {1} goes to the leaf of 4 = {3,4}
    CHECK(corr.forward == std::vector<std::size_t>{1, 0});
    CHECK(corr.backward == std::vector<std::size_t>{1, 0});
}

TEST_CASE("leaves of perfect and constant connections") {
    fixtures::Diamonds ex;
    const auto lp = leaves(ex.fixing, Side::P);
    CHECK(lp.leaves.size() == 4);
    for (const auto& leaf : lp.leaves) {
        CHECK(leaf.size() == 1);
    }
    const auto corr = leaf_antiiso(ex.fixing);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(lp.leaves[corr.forward[i]].front() == ex.fixing.f()(lp.leaves[i].front()));
    }
    const auto d = ex.d;
    const GaloisConnection top{d, d, {3, 3, 3, 3}, {3, 3, 3, 3}};
    const auto lt = leaves(top, Side::P);
    REQUIRE(lt.leaves.size() == 1);
    CHECK(lt.leaves.front().size() == 4);
    CHECK(leaf_antiiso(top).forward == std::vector<std::size_t>{0});
}

TEST_CASE("derive_adjoint recovers g") {
    fixtures::Chains ex;
    const auto r = derive_adjoint(ex.first.f());
    REQUIRE(r.connection.has_value());
    CHECK(*r.connection == ex.first);
    const auto r2 = derive_adjoint(ex.second.f());
    REQUIRE(r2.connection.has_value());
    CHECK(*r2.connection == ex.second);

    const auto d = share(diamond());
    const auto c = share(chain(2));
    const auto top = derive_adjoint(OrderMap{d, c, {1, 1, 1, 1}});
    REQUIRE(top.connection.has_value());
    CHECK(std::ranges::equal(top.connection->g().table(), std::vector<Element>{3, 3}));
}

TEST_CASE("derive_adjoint reports missing joins") {
    // P: bottom below two incomparable maximal elements; no top.
    const auto p = share(Poset::from_predicate(3, [](Element x, Element y) { return x == y || x == 0; }));
    const auto q = share(chain(1));
    // every p maps to the only q, so g(q) would be the join of all of P
    const auto r = derive_adjoint(OrderMap{p, q, {0, 0, 0}});
    CHECK_FALSE(r.connection.has_value());
    CHECK(r.missing_joins == std::vector<Element>{0});
}

TEST_CASE("derive_adjoint agrees with the brute-force search on every antitone map") {
    for (const auto& p : oracle::posets_up_to(3)) {
        for (const auto& q : oracle::posets_up_to(3)) {
            const auto brute = oracle::brute_gcs(*p, *q);
            for (const auto& f : oracle::all_maps(p->size(), q->size())) {
                const OrderMap m{p, q, f};
                if (!is_antitone(m)) {
                    continue;
                }
                const auto r = derive_adjoint(m);
                const auto it = std::find_if(brute.begin(), brute.end(), [&](const auto& pr) { return pr.first == f; });
                CHECK(r.connection.has_value() == (it != brute.end()));
                if (r.connection && it != brute.end()) {
                    CHECK(std::ranges::equal(r.connection->g().table(), it->second));
                }
            }
        }
    }
}

TEST_CASE("is_perfect") {
    fixtures::Diamonds dm;
    fixtures::Chains ch;
    CHECK(is_perfect(dm.fixing));
    CHECK(is_perfect(dm.swapping));
    CHECK_FALSE(is_perfect(ch.first));
    const auto d = dm.d;
    CHECK_FALSE(is_perfect(GaloisConnection{d, d, {3, 3, 3, 3}, {3, 3, 3, 3}}));
}

TEST_CASE("idempotence_check") {
    fixtures::Chains ex;
    CHECK(idempotence_check(ex.second).ok());
    for (Element p = 0; p < 3; ++p) {
        CHECK(ex.second.f()(ex.second.g()(ex.second.f()(p))) == ex.second.f()(p));
    }
    // perturbed g breaks gfg = g
    const GaloisConnection broken{ex.p, ex.q, {3, 2, 0}, {2, 1, 0, 0}};
    const auto r = idempotence_check(broken);
    CHECK_FALSE(r.ok());
    CHECK(r.violations().front().witness.size() == 1);
}

TEST_CASE("node lattices") {
    fixtures::Chains ex;
    CHECK(node_lattice_complete(ex.first, Side::P));
    CHECK(node_lattice_complete(ex.first, Side::Q));
    // identity on a 2-antichain is a connection whose nodes form an antichain
    const auto a = share(antichain(2));
    const GaloisConnection gc{a, a, {0, 1}, {0, 1}};
    REQUIRE(validate_gc(gc).ok());
    CHECK_FALSE(node_lattice_complete(gc, Side::P));
}

TEST_CASE("node sets are complete lattices whenever one side is, on random bounded posets") {
    std::mt19937_64 rng{11};
    int seen = 0;
    for (int round = 0; round < 60; ++round) {
        const auto p = share(gen::random_bounded_poset(rng() % 3, rng));
        const auto q = share(gen::random_poset(1 + rng() % 4, rng));
        const auto gc = gen::random_gc(p, q, rng);
        if (!gc) {
            continue;
        }
        ++seen;
        REQUIRE(is_complete_lattice(*p));
        CHECK(node_lattice_complete(*gc, Side::P));
        CHECK(node_lattice_complete(*gc, Side::Q));
    }
    CHECK(seen > 0);
}

TEST_CASE("random connections satisfy the structural properties") {
    std::mt19937_64 rng{3};
    for (int round = 0; round < 150; ++round) {
        const auto p = share(gen::random_poset(1 + rng() % 5, rng));
        const auto q = share(gen::random_poset(1 + rng() % 5, rng));
        const auto gc = gen::random_gc(p, q, rng);
        if (!gc) {
            continue;
        }
        CHECK(validate_gc(*gc).ok());
        CHECK(validate_gc_adjoint(*gc).ok());
        CHECK(idempotence_check(*gc).ok());
        CHECK(nodes(*gc, Side::P) == image(*gc, Side::P));
        CHECK(nodes(*gc, Side::Q) == image(*gc, Side::Q));
        const auto lp = leaves(*gc, Side::P);
        const auto lq = leaves(*gc, Side::Q);
        CHECK(lp.leaves.size() == lq.leaves.size());
        const auto corr = leaf_antiiso(*gc);
        for (std::size_t i = 0; i < corr.forward.size(); ++i) {
            CHECK(corr.backward[corr.forward[i]] == i);
        }
    }
}
