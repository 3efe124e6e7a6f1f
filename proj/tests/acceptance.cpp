// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "fixtures.hpp"

#include "galcore/category.hpp"
#include "galcore/concepts.hpp"
#include "galcore/oracle.hpp"
#include "galcore/ordering.hpp"
#include "galcore/rdf.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace galcore;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
};

Check from_sweeps(std::initializer_list<oracle::PropositionResult> results) {
    Check c;
    std::ostringstream d;
    for (const auto& r : results) {
        if (!r.ok()) {
            c.ok = false;
            d << r.name << ": " << r.witness << "; ";
        } else {
            d << r.name << " " << r.instances << " instances; ";
        }
    }
    c.detail = d.str();
    return c;
}

Check chain_example() {
    fixtures::Chains ex;
    const bool valid = validate_gc(ex.first).ok() && validate_gc(ex.second).ok();
    const auto p = preceq_P(ex.first, ex.second);
    const auto q = preceq_Q(ex.first, ex.second);
    const bool witness = !q.holds && q.witness && q.witness->side == Side::Q &&
                         ex.second.Q().label(q.witness->element) == "2" &&
                         q.witness->detail == "f2g2(2) = 3 not <= 2 = f1g1(2)" &&
                         ex.second.close_q(1) == 2 && ex.first.close_q(1) == 1;
    Check c{valid && p.holds && witness, {}};
    c.detail = "preceq_P " + std::string(p.holds ? "holds" : "fails") + "; preceq_Q " +
               (q.holds ? "holds" : "fails: " + (q.witness ? q.witness->detail : std::string{})) + "; ";
    return c;
}

Check diamond_example() {
    fixtures::Diamonds ex;
    const bool perfect = is_perfect(ex.fixing) && is_perfect(ex.swapping);
    const bool forward = preceq_PQ(ex.fixing, ex.swapping).holds;
    const bool backward = preceq_PQ(ex.swapping, ex.fixing).holds;
    const bool distinct = !(ex.fixing == ex.swapping);
    Check c{perfect && forward && backward && distinct, {}};
    c.detail = std::string("perfect=") + (perfect ? "yes" : "no") + " both ways=" +
               (forward && backward ? "yes" : "no") + " distinct=" + (distinct ? "yes" : "no") + "; ";
    return c;
}

Check rdf_example() {
    const auto triples = rdf::parse_ntriples("<http://example.org/s1> <http://example.org/p1> <http://example.org/o1> .\n"
                                             "<http://example.org/s1> <http://example.org/p2> <http://example.org/o2> .\n"
                                             "<http://example.org/s2> <http://example.org/p2> <http://example.org/o3> .\n");
    const auto ctx = rdf::context_from_triples(triples);
    const bool shape = ctx.object_count() == 2 && ctx.attribute_count() == 2 && ctx.incident(0, 0) &&
                       ctx.incident(0, 1) && !ctx.incident(1, 0) && ctx.incident(1, 1);
    const auto schema = rdf::schema_classes(ctx);
    const auto brute = oracle::brute_concepts(ctx);
    bool extents = schema.classes.size() == brute.size();
    for (std::size_t i = 0; extents && i < brute.size(); ++i) {
        extents = schema.classes[i].extent == brute[i].extent;
    }
    auto more = triples;
    more.triples.push_back({"http://example.org/s2", "http://example.org/p1", "\"added\"@en"});
    const auto diff = rdf::schema_diff(ctx, rdf::context_from_triples(more));
    const bool grows = diff.relation_old_new.holds;
    Check c{shape && extents && grows, {}};
    c.detail = std::string("2x2 context ") + (shape ? "ok" : "wrong") + "; " + std::to_string(schema.classes.size()) +
               " classes " + (extents ? "match" : "differ from") + " brute force; old <= new " +
               (grows ? "holds" : "fails") + "; ";
    return c;
}

} // namespace

struct Criterion {
    std::string title;
    std::function<Check()> body;
    /// Wall-clock budget in seconds; 0 means none.
    double limit = 0.0;
};

int main() {
    const std::uint64_t seed = 20240601;
    const std::vector<Criterion> criteria{
        {"relation/polarity bijection on 3x3", [] { return from_sweeps({oracle::sweep_bijection(3, 3)}); }, 5.0},
        {"two connection definitions agree on posets <= 3",
         [] { return from_sweeps({oracle::sweep_gc_definitions(3)}); }},
        {"connection structure on posets <= 4", [] { return from_sweeps({oracle::sweep_gc_structure(4)}); }},
        {"chain example golden values", chain_example},
        {"diamond example golden values", diamond_example},
        {"three readings of the P pre-order agree on posets <= 4",
         [] { return from_sweeps({oracle::sweep_closure_refinement(4)}); }, 60.0},
        {"relation order equals pointwise order (3x3 and 2x2)",
         [] { return from_sweeps({oracle::sweep_order_equality(3, 3), oracle::sweep_order_equality(2, 2)}); }},
        {"protoconcept conditions agree on 3x3", [] { return from_sweeps({oracle::sweep_protoconcept(3, 3)}); }},
        {"Precon interval and membership on K1 and 100 random 4x4",
         [seed] {
             return from_sweeps(
                 {oracle::sweep_precon_context(fixtures::k1()), oracle::sweep_precon_random(100, 4, 4, seed)});
         }},
        {"embedding into polarities on posets <= 3", [] { return from_sweeps({oracle::sweep_embedding(3)}); }},
        {"morphism characterizations (2 exhaustive, 3 sampled)",
         [seed] { return from_sweeps({oracle::sweep_morphism(2, 3, 10000, seed)}); }},
        {"concept enumeration equals brute force (3x3 and K1)",
         [] { return from_sweeps({oracle::sweep_concepts(3, 3), oracle::sweep_concepts_context(fixtures::k1())}); }},
        {"RDF pipeline golden values", rdf_example},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& crit = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = crit.body();
        } catch (const std::exception& e) {
            c = {false, std::string("exception: ") + e.what() + "; "};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (crit.limit > 0.0 && seconds >= crit.limit) {
            c.ok = false;
            c.detail += "over the " + std::to_string(static_cast<int>(crit.limit)) + " s budget; ";
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << "  [" << std::setw(2) << i + 1 << "] " << crit.title << "  ("
                  << c.detail << std::fixed << std::setprecision(2) << seconds << " s)\n";
        failures += c.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << '\n';
    return failures == 0 ? 0 : 1;
}
