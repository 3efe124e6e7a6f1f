#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"

#include "galcore/error.hpp"
#include "galcore/oracle.hpp"

#include <fstream>
#include <sstream>

using namespace galcore;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in{path};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

FormalContext full(std::size_t g, std::size_t m) {
    FormalContext ctx{g, m};
    for (Element i = 0; i < g; ++i) {
        for (Element j = 0; j < m; ++j) {
            ctx.set_incident(i, j);
        }
    }
    return ctx;
}

} // namespace

TEST_CASE("H and K on the empty and the full relation") {
    const FormalContext empty{3, 2};
    CHECK(H(empty, 0b001) == 0);
    CHECK(H(empty, 0) == 0b11);
    CHECK(K(empty, 0b01) == 0);
    CHECK(K(empty, 0) == 0b111);
    const auto f = full(3, 2);
    for (Subset a = 0; a < 8; ++a) {
        CHECK(H(f, a) == 0b11);
    }
}

TEST_CASE("H and K on K1") {
    const auto k1 = fixtures::k1();
    CHECK(H(k1, 0b011) == 0b010);
    CHECK(K(k1, 0b010) == 0b011);
    CHECK(H(k1, 0b001) == 0b011);
    CHECK(closure_GG(k1, 0b001) == 0b001);
    CHECK(closure_GG(full(2, 2), 0) == 0b11);
}

TEST_CASE("H and K reject subsets outside the carrier") {
    const auto k1 = fixtures::k1();
    CHECK_THROWS_AS((void)H(k1, 0b1000), DimensionMismatch);
    CHECK_THROWS_AS((void)K(k1, 0b1000), DimensionMismatch);
}

TEST_CASE("H and K agree with the literal definitions on random contexts") {
    std::mt19937_64 rng{5};
    for (int round = 0; round < 300; ++round) {
        const auto ctx = gen::random_context(1 + rng() % 6, 1 + rng() % 6, rng);
        const Subset a = gen::random_subset(ctx.object_count(), rng);
        const Subset b = gen::random_subset(ctx.attribute_count(), rng);
        CHECK(H(ctx, a) == oracle::naive_H(ctx, a));
        CHECK(K(ctx, b) == oracle::naive_K(ctx, b));
        // antitone, extensive, idempotent
        const Subset a2 = a | gen::random_subset(ctx.object_count(), rng);
        CHECK(is_subset(H(ctx, a2), H(ctx, a)));
        CHECK(is_subset(a, closure_GG(ctx, a)));
        CHECK(closure_GG(ctx, closure_GG(ctx, a)) == closure_GG(ctx, a));
        CHECK(is_subset(closure_GG(ctx, a), closure_GG(ctx, a2)));
        CHECK(is_subset(b, closure_MM(ctx, b)));
        CHECK(closure_MM(ctx, closure_MM(ctx, b)) == closure_MM(ctx, b));
    }
}

TEST_CASE("closure is idempotent on every subset of K1") {
    const auto k1 = fixtures::k1();
    for (Subset a = 0; a < 8; ++a) {
        CHECK(closure_GG(k1, closure_GG(k1, a)) == closure_GG(k1, a));
        CHECK(H(k1, K(k1, H(k1, a))) == H(k1, a));
    }
}

TEST_CASE("polarity of the 2x2 diagonal materializes over two diamonds") {
    FormalContext diag{2, 2};
    diag.set_incident(0, 0);
    diag.set_incident(1, 1);
    const auto gc = polarity_of(diag).materialize();
    REQUIRE(gc.has_value());
    CHECK(gc->P() == diamond());
    CHECK(gc->Q() == diamond());
    CHECK(validate_gc(*gc).ok());
}

TEST_CASE("polarity of the empty relation is constant off the empty set") {
    const FormalContext empty{2, 3};
    const auto pol = polarity_of(empty);
    for (Subset a = 1; a < 4; ++a) {
        CHECK(pol.H(a) == 0);
    }
    CHECK(pol.H(0) == 0b111);
    const auto gc = pol.materialize();
    REQUIRE(gc.has_value());
    CHECK(relation_of(*gc) == empty);
}

TEST_CASE("relation_of inverts polarity_of") {
    const auto k1 = fixtures::k1();
    CHECK(relation_of(polarity_of(k1)) == k1);
    const auto gc = polarity_of(k1).materialize();
    REQUIRE(gc.has_value());
    CHECK(relation_of(*gc) == k1);
    CHECK(relation_of(*gc).object_labels() == std::vector<std::string>{"g1", "g2", "g3"});
}

TEST_CASE("relation_of refuses connections that are not between powerset lattices") {
    fixtures::Chains ex;
    CHECK_THROWS_AS((void)relation_of(ex.first), NotPowersetLattice);
}

TEST_CASE("materialization respects the cap") {
    const FormalContext big{13, 2};
    CHECK_FALSE(polarity_of(big).materialize().has_value());
    CHECK_FALSE(polarity_of(big).materializable(12));
    CHECK(polarity_of(big).materializable(13));
    CHECK(polarity_of(FormalContext{3, 3}).materialize(3).has_value());
    CHECK_FALSE(polarity_of(FormalContext{3, 3}).materialize(2).has_value());
}

TEST_CASE("all 3x3 relations are valid polarities that roundtrip") {
    for (std::uint64_t bits = 0; bits < 512; ++bits) {
        const auto ctx = oracle::context_from_bits(3, 3, bits);
        const auto gc = polarity_of(ctx).materialize();
        REQUIRE(gc.has_value());
        CHECK(validate_gc(*gc).ok());
        CHECK(relation_of(*gc) == ctx);
    }
}

TEST_CASE("parse_cxt reads the Burmeister format") {
    const auto ctx = parse_cxt("B\n\n\n1\n1\n\nx\ny\nX\n");
    CHECK(ctx.object_count() == 1);
    CHECK(ctx.attribute_count() == 1);
    CHECK(ctx.incident(0, 0));
    const auto k1 = parse_cxt(slurp(fixtures::data_path("k1.cxt")));
    CHECK(k1 == fixtures::k1());
    CHECK(k1.name() == "K1");
    CHECK(k1.object_labels() == fixtures::k1().object_labels());
}

TEST_CASE("parse_cxt reports line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            (void)parse_cxt(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("B\n\n\n1\n1\n\nx\ny\nY\n") == 9);
    CHECK(line_of("A\n") == 1);
    CHECK(line_of("B\n\n\nthree\n1\n") == 4);
    CHECK(line_of("B\n\n\n1\nfour\n") == 5);
    CHECK(line_of("B\n\n\n1\n2\n\nx\ny\nz\nX\n") == 10);
    CHECK(line_of("B\n\n\n2\n1\n\na\nb\nm\nX\n") > 0);
    CHECK(line_of("B\n\n\n1\n1\n\nx\ny\nX\nX\n") == 10);
    CHECK(line_of("B\n\n\n1\n1\n\nx\ny\nX\n") == 0);
}

TEST_CASE("parse_cxt rejects duplicate labels and oversize carriers") {
    CHECK_THROWS_AS((void)parse_cxt("B\n\n\n2\n1\n\na\na\nm\nX\nX\n"), Error);
    CHECK_THROWS_AS((void)parse_cxt("B\n\n\n65\n1\n\n"), CapExceeded);
}

TEST_CASE("write_cxt then parse_cxt is the identity") {
    const auto k1 = fixtures::k1();
    const auto text = write_cxt(k1);
    CHECK(parse_cxt(text) == k1);
    CHECK(write_cxt(parse_cxt(text)) == text);
    std::mt19937_64 rng{9};
    for (int round = 0; round < 50; ++round) {
        const auto ctx = gen::random_context(rng() % 8, rng() % 8, rng);
        CHECK(parse_cxt(write_cxt(ctx)) == ctx);
    }
}

TEST_CASE("FormalContext construction") {
    CHECK_THROWS_AS(FormalContext({"a", "a"}, {"m"}), Error);
    const FormalContext c{2, 2};
    CHECK(c.object_labels() == std::vector<std::string>{"g1", "g2"});
    CHECK(c.attribute_labels() == std::vector<std::string>{"m1", "m2"});
    CHECK(fixtures::k1().find_attribute("m3") == 2);
    CHECK(fixtures::k1().incidence_count() == 4);
    const FormalContext zero{0, 0};
    CHECK(H(zero, 0) == 0);
    CHECK(polarity_of(zero).materialize().has_value());
}
