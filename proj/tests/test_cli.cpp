#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"
#include "fixtures.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "galcore");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = galcore::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return fixtures::data_path(name); }

std::filesystem::path scratch(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "galcore_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream{path} << content;
    return path;
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"concepts"}).code == 2);
    CHECK(run({"concepts", "/nonexistent/file.cxt"}).code == 2);
    CHECK(run({"--cap", "99", "ctx", "validate", data("k1.cxt")}).code == 2);
    const auto mixed = run({"order", "--a", data("k1.cxt"), "--gc-b", data("chains_f2.json")});
    CHECK(mixed.code == 2);
    CHECK(has(mixed.err, "usage error"));
}

TEST_CASE("help exits with 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "oracle"));
    CHECK(run({"morphism", "--help"}).code == 0);
}

TEST_CASE("ctx subcommands") {
    const auto v = run({"ctx", "validate", data("k1.cxt")});
    CHECK(v.code == 0);
    CHECK(v.out == "valid: 3 objects, 3 attributes, 4 incidences\n");
    const auto rt = run({"ctx", "roundtrip", data("k1.cxt")});
    CHECK(rt.code == 0);
    std::ifstream in{data("k1.cxt")};
    std::ostringstream original;
    original << in.rdbuf();
    CHECK(rt.out == original.str());
    CHECK(run({"ctx", "show", data("k1.cxt")}).code == 0);
}

TEST_CASE("malformed context exits with 1 and names the line") {
    const auto bad = scratch("bad.cxt", "B\n\n\n1\n1\n\nx\ny\nY\n");
    const auto r = run({"ctx", "validate", bad.string()});
    CHECK(r.code == 1);
    CHECK(has(r.err, "line 9"));
}

TEST_CASE("concepts") {
    const auto r = run({"concepts", data("k1.cxt")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "c0  {}  {m1,m2,m3}"));
    CHECK(has(r.out, "c4  {g1,g2,g3}  {}"));
    const auto j = run({"concepts", data("k1.cxt"), "--json"});
    CHECK(nlohmann::json::parse(j.out)["concepts"].size() == 5);
    const auto dot = run({"concepts", data("k1.cxt"), "--dot", "-"});
    CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("preconcept") {
    const auto r = run({"preconcept", data("k1.cxt"), "--extent", "g2", "--intent", "m2"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "protoconcept: yes"));
    CHECK(has(r.out, "precon size: 1"));
    const auto bad = run({"preconcept", data("k1.cxt"), "--extent", "g3", "--intent", "m1"});
    CHECK(bad.code == 1);
    CHECK(has(bad.err, "not a preconcept"));
    CHECK(run({"preconcept", data("k1.cxt"), "--extent", "nobody"}).code == 1);
}

TEST_CASE("gm") {
    const auto r = run({"gm", data("k1.cxt"), "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["elements"].size() == 13);
}

TEST_CASE("order reports the chain example witness") {
    const auto q = run({"order", "--gc-a", data("chains_f1.json"), "--gc-b", data("chains_f2.json"), "--kind", "q"});
    CHECK(q.code == 0);
    CHECK(has(q.out, "f2g2(2) = 3 not <= 2 = f1g1(2)"));
    const auto p = run({"order", "--gc-a", data("chains_f1.json"), "--gc-b", data("chains_f2.json"), "--kind", "p"});
    CHECK(has(p.out, "p: holds"));
    const auto rel = run({"order", "--a", data("k1.cxt"), "--b", data("k1.cxt")});
    CHECK(rel.code == 0);
    CHECK(has(rel.out, "holds"));
    CHECK(run({"order", "--gc-a", data("chains_f1.json"), "--gc-b", data("diamond_f.json")}).code == 1);
}

TEST_CASE("galcheck") {
    CHECK(run({"galcheck", "--gc", data("chain2_identity.json")}).code == 1);
    const auto ok = run({"galcheck", "--gc", data("diamond_f.json")});
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "perfect: yes"));
}

TEST_CASE("embed and morphism") {
    const auto e = run({"embed", "--gc", data("chains_f1.json")});
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out).is_object());
    const auto m = run({"morphism", "--src", data("diamond_f.json"), "--dst", data("diamond_f_swap.json"), "--h",
                        "0,1,2,3", "--k", "0,1,2,3"});
    CHECK(m.code == 0);
    CHECK(has(m.out, "morphism: no"));
    const auto id = run({"morphism", "--src", data("diamond_f.json"), "--dst", data("diamond_f.json"), "--h",
                         "bot,a,b,top", "--k", "0,1,2,3"});
    CHECK(has(id.out, "morphism: yes"));
}

TEST_CASE("rdf subcommands") {
    const auto ingest = run({"rdf", "ingest", data("people.nt")});
    CHECK(ingest.code == 0);
    CHECK(has(ingest.out, "XX\n.X\n"));
    CHECK(run({"rdf", "schema", data("people.nt")}).code == 0);
    CHECK(run({"rdf", "schema", data("k1.cxt")}).code == 0);
    const auto diff = run({"rdf", "diff", data("people.nt"), data("people_more.nt")});
    CHECK(diff.code == 0);
    CHECK(has(diff.out, "relation old<=new: holds"));
    const auto bad = scratch("bad.nt", "<http://a> <http://b> <http://c>\n");
    const auto r = run({"rdf", "ingest", bad.string()});
    CHECK(r.code == 1);
    CHECK(has(r.err, "line 1"));
}

TEST_CASE("oracle") {
    const auto list = run({"oracle", "--list"});
    CHECK(list.code == 0);
    CHECK(has(list.out, "bijection"));
    const auto one = run({"oracle", "--sweep", "bijection,concepts", "--max", "2x2", "--json"});
    CHECK(one.code == 0);
    const auto j = nlohmann::json::parse(one.out);
    CHECK(j["ok"] == true);
    CHECK(j["results"].size() == 2);
    CHECK(run({"oracle", "--sweep", "nonsense"}).code == 1);
    CHECK(run({"oracle", "--poset-max", "9"}).code == 1);
}
