#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"

#include "galcore/category.hpp"
#include "galcore/error.hpp"
#include "galcore/oracle.hpp"

using namespace galcore;

namespace {

std::vector<Element> iota(std::size_t n) {
    std::vector<Element> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<Element> tab(std::span<const Element> s) { return {s.begin(), s.end()}; }

} // namespace

TEST_CASE("identity morphisms") {
    fixtures::Chains ex;
    const auto id = identity(ex.first);
    CHECK(tab(id.h()) == iota(3));
    CHECK(tab(id.k()) == iota(4));
    CHECK(is_monomorphism(id));
    CHECK(is_order_preserving(id));
    CHECK(is_gal_morphism(ex.first, ex.first, id.h(), id.k()).holds);
    // identity tables between different connections on the same carriers
    CHECK_FALSE(is_gal_morphism(ex.first, ex.second, id.h(), id.k()).holds);
}

TEST_CASE("constructor rejects bad tables") {
    fixtures::Chains ex;
    CHECK_THROWS_AS(GalMorphism(ex.first, ex.second, iota(3), iota(4)), InvalidMorphism);
    CHECK_THROWS_AS(GalMorphism(ex.first, ex.first, iota(2), iota(4)), DimensionMismatch);
    CHECK_THROWS_AS(GalMorphism(ex.first, ex.first, {0, 1, 5}, iota(4)), DimensionMismatch);
    CHECK_THROWS_AS((void)is_gal_morphism(ex.first, ex.first, iota(3), iota(3)), DimensionMismatch);
}

TEST_CASE("sending a node to a non-node breaks the squares") {
    fixtures::Chains ex;
    // P nodes are 1 and 3 (indices 0, 2); the constant map to 2 (index 1) hits a non-node
    CHECK(nodes(ex.first, Side::P) == std::vector<Element>{0, 2});
    const std::vector<Element> h{1, 1, 1};
    const std::vector<Element> k{1, 1, 1, 1};
    const auto c = characterize_morphism(ex.first, ex.first, h, k);
    CHECK_FALSE(c.commutes.holds);
    CHECK_FALSE(c.preserves_nodes.holds);
    CHECK_FALSE(c.paths_agree.holds);
    CHECK(c.consistent());
}

TEST_CASE("morphism characterizations agree on random quadruples") {
    std::mt19937_64 rng{51};
    std::size_t positive = 0;
    for (int round = 0; round < 300; ++round) {
        const auto p1 = share(gen::random_bounded_poset(rng() % 2, rng));
        const auto q1 = share(gen::random_bounded_poset(rng() % 2, rng));
        const auto p2 = share(gen::random_bounded_poset(rng() % 2, rng));
        const auto q2 = share(gen::random_bounded_poset(rng() % 2, rng));
        const auto src = gen::random_gc(p1, q1, rng);
        const auto dst = gen::random_gc(p2, q2, rng);
        REQUIRE(src.has_value());
        REQUIRE(dst.has_value());
        std::vector<Element> h(p1->size());
        std::vector<Element> k(q1->size());
        for (auto& x : h) {
            x = rng() % p2->size();
        }
        for (auto& y : k) {
            y = rng() % q2->size();
        }
        const auto c = characterize_morphism(*src, *dst, h, k);
        CHECK(c.consistent());
        CHECK(c.commutes.holds == is_gal_morphism(*src, *dst, h, k).holds);
        positive += c.commutes.holds ? 1 : 0;
    }
    CHECK(positive > 0);
}

TEST_CASE("composition") {
    fixtures::Chains chains;
    fixtures::Diamonds diamonds;
    const auto emb = embed_into_polarity(chains.first);
    const auto left = compose(emb.morphism, identity(chains.first));
    CHECK(tab(left.h()) == tab(emb.morphism.h()));
    CHECK(tab(left.k()) == tab(emb.morphism.k()));
    const auto right = compose(identity(emb.polarity), emb.morphism);
    CHECK(tab(right.h()) == tab(emb.morphism.h()));
    CHECK_THROWS_AS((void)compose(identity(diamonds.fixing), identity(chains.first)), EndpointMismatch);

    // swapping a and b is an automorphism of the fixing connection; twice is the identity
    const GalMorphism swap{diamonds.fixing, diamonds.fixing, {0, 2, 1, 3}, {0, 2, 1, 3}};
    const auto twice = compose(swap, swap);
    CHECK(tab(twice.h()) == iota(4));
    CHECK(is_order_preserving(swap));
}

TEST_CASE("a monomorphism that is not order-preserving") {
    fixtures::Diamonds ex;
    // swapping: f = g = (bot top)(a b); the permutation (bot top) commutes with it
    const std::vector<Element> flip{3, 1, 2, 0};
    const GalMorphism m{ex.swapping, ex.swapping, flip, flip};
    CHECK(is_monomorphism(m));
    CHECK_FALSE(is_order_preserving(m));
}

TEST_CASE("embedding of the chain example") {
    fixtures::Chains ex;
    const auto emb = embed_into_polarity(ex.first);
    CHECK(validate_gc(emb.polarity).ok());
    CHECK(emb.polarity.P().size() == 8);
    CHECK(emb.polarity.Q().size() == 16);
    // i(x) is the down-set of x, as a bitmask
    CHECK(tab(emb.morphism.h()) == std::vector<Element>{0b001, 0b011, 0b111});
    CHECK(tab(emb.morphism.k()) == std::vector<Element>{0b0001, 0b0011, 0b0111, 0b1111});
    CHECK(is_monomorphism(emb.morphism));
    CHECK(is_gal_morphism(ex.first, emb.polarity, emb.morphism.h(), emb.morphism.k()).holds);

    const auto rel = embedding_relation(ex.first);
    CHECK(relation_of(emb.polarity) == rel);
    for (Subset a = 0; a < 8; ++a) {
        CHECK(H(rel, a) == emb.polarity.f()(a));
    }
    for (Subset b = 0; b < 16; ++b) {
        CHECK(K(rel, b) == emb.polarity.g()(b));
    }
}

TEST_CASE("embedding respects the cap") {
    const auto big = share(chain(13));
    const GaloisConnection gc = *extremal_gcs(big, big).greatest;
    CHECK_THROWS_AS((void)embed_into_polarity(gc), CapExceeded);
    CHECK_THROWS_AS((void)embed_into_polarity(fixtures::Chains{}.first, 3), CapExceeded);
}

TEST_CASE("the embedding is initial") {
    fixtures::Chains ex;
    const auto emb = embed_into_polarity(ex.first);
    std::vector<GaloisConnection> probes;
    for (const auto& p : oracle::posets_up_to(2, 1)) {
        for (const auto& q : oracle::posets_up_to(2, 1)) {
            for (auto& gc : enumerate_gcs(p, q)) {
                probes.push_back(std::move(gc));
            }
        }
    }
    const auto report = check_initiality(emb.morphism, probes);
    CHECK(report.ok());
    CHECK(report.probes == probes.size());
    CHECK(report.checked > 0);
    CHECK(report.triggered > 0);
}

TEST_CASE("a non-injective morphism is not initial") {
    // collapse the chain example onto the one-point connection
    fixtures::Chains ex;
    const auto one = share(chain(1));
    const GaloisConnection point{one, one, {0}, {0}};
    const GalMorphism collapse{ex.first, point, {0, 0, 0}, {0, 0, 0, 0}};
    CHECK_FALSE(is_monomorphism(collapse));
    const std::vector<GaloisConnection> probes{point};
    const auto report = check_initiality(collapse, probes);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.first_violation.empty());
}

TEST_CASE("context morphisms") {
    const auto k1 = fixtures::k1();
    CHECK(is_context_morphism(k1, k1, iota(8), iota(8)).holds);
    std::vector<Element> zero(8, 0);
    CHECK_FALSE(is_context_morphism(k1, k1, zero, zero).holds);
    CHECK_THROWS_AS((void)is_context_morphism(FormalContext{13, 1}, k1, iota(8), iota(8)), CapExceeded);
}
