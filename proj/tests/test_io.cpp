#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"

#include "galcore/error.hpp"
#include "galcore/io.hpp"

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

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

} // namespace

TEST_CASE("poset JSON roundtrip") {
    const Poset d = diamond();
    const auto j = poset_to_json(d);
    CHECK(j["size"] == 4);
    const Poset back = poset_from_json(j);
    CHECK(back == d);
    CHECK(back.labels() == d.labels());
    std::mt19937_64 rng{71};
    for (int round = 0; round < 50; ++round) {
        const auto p = gen::random_poset(rng() % 7, rng);
        CHECK(poset_from_json(poset_to_json(p)) == p);
    }
}

TEST_CASE("poset JSON errors") {
    CHECK_THROWS_AS((void)poset_from_json(nlohmann::json::object()), Error);
    CHECK_THROWS_AS((void)poset_from_json(parse_json(R"({"size": 2, "leq": [[true]]})")), DimensionMismatch);
    CHECK_THROWS_AS((void)parse_json("{not json"), Error);
    CHECK_THROWS_AS((void)gc_from_json(parse_json(R"({"P": {"size": 1, "leq": [[true]]}})")), Error);
}

TEST_CASE("connection JSON roundtrip") {
    fixtures::Chains ex;
    const auto back = gc_from_json(gc_to_json(ex.first));
    CHECK(back == ex.first);
    CHECK(back.P().label(0) == "1");
    const auto from_file = gc_from_json(parse_json(slurp(fixtures::data_path("chains_f1.json"))));
    CHECK(from_file == ex.first);
    const auto second = gc_from_json(parse_json(slurp(fixtures::data_path("chains_f2.json"))));
    CHECK(second == ex.second);
    fixtures::Diamonds dm;
    CHECK(gc_from_json(parse_json(slurp(fixtures::data_path("diamond_f.json")))) == dm.fixing);
    CHECK(gc_from_json(parse_json(slurp(fixtures::data_path("diamond_f_swap.json")))) == dm.swapping);
    const auto invalid = gc_from_json(parse_json(slurp(fixtures::data_path("chain2_identity.json"))));
    CHECK_FALSE(validate_gc(invalid).ok());
}

TEST_CASE("covering pairs") {
    CHECK(covering_pairs(chain(1)).empty());
    CHECK(covering_pairs(chain(3)) == std::vector<std::pair<Element, Element>>{{0, 1}, {1, 2}});
    CHECK(covering_pairs(diamond()) == std::vector<std::pair<Element, Element>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(covering_pairs(antichain(3)).empty());
}

TEST_CASE("DOT export") {
    FormalContext full{1, 1};
    full.set_incident(0, 0);
    const auto one = enumerate_concepts(full);
    REQUIRE(one.concepts.size() == 1);
    const auto dot1 = export_dot(one, full);
    CHECK(count(dot1, "->") == 0);
    CHECK(dot1.rfind("digraph", 0) == 0);

    const FormalContext bare{1, 1};
    const auto two = enumerate_concepts(bare);
    REQUIRE(two.concepts.size() == 2);
    const auto dot2 = export_dot(two, bare);
    CHECK(count(dot2, "->") == 1);
    CHECK(dot2.find("c0 -> c1;") != std::string::npos);

    const auto k1 = fixtures::k1();
    const auto lattice = enumerate_concepts(k1);
    const auto dot = export_dot(lattice, k1);
    CHECK(count(dot, "->") == covering_pairs(lattice.order).size());
    CHECK(count(dot, "->") == 5);
    // reduced labelling: each label printed exactly once
    for (const auto* label : {"g1", "g2", "g3", "m1", "m2", "m3"}) {
        CHECK(count(dot, label) == 1);
    }
}

TEST_CASE("DOT escapes quotes in labels") {
    FormalContext ctx{{"a\"b"}, {"m"}};
    ctx.set_incident(0, 0);
    const auto dot = export_dot(enumerate_concepts(ctx), ctx);
    CHECK(dot.find("a\\\"b") != std::string::npos);
}

TEST_CASE("lattice JSON") {
    const auto k1 = fixtures::k1();
    const auto j = lattice_to_json(enumerate_concepts(k1), k1);
    CHECK(j["concepts"].size() == 5);
    CHECK(j["covers"].size() == 5);
}
