#pragma once

#include "galcore/concepts.hpp"
#include "galcore/context.hpp"
#include "galcore/galois.hpp"
#include "galcore/poset.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

/// Reference implementations written straight from the quantifiers, plus the
/// exhaustive sweeps that certify the library against them. Nothing in here
/// reuses the closure or enumeration code of the optimized layer.
namespace galcore::oracle {

/// {m : for all g in A, g R m}, evaluated cell by cell.
Subset naive_H(const FormalContext& ctx, Subset objects);
Subset naive_K(const FormalContext& ctx, Subset attributes);

/// Filter of all 2^|G| * 2^|M| pairs by H(A) = B and K(B) = A, ascending by extent.
std::vector<Concept> brute_concepts(const FormalContext& ctx, std::size_t max_carrier = 4);

/// First definition checked literally: antitone maps and both inequalities.
bool naive_is_gc(const Poset& p, const Poset& q, std::span<const Element> f, std::span<const Element> g);

/// Every (f, g) among all |Q|^|P| * |P|^|Q| table pairs passing `naive_is_gc`,
/// ascending lexicographically by (f, g).
std::vector<std::pair<std::vector<Element>, std::vector<Element>>> brute_gcs(const Poset& p, const Poset& q);

/// All functions {0..domain-1} -> {0..codomain-1}, lexicographic.
std::vector<std::vector<Element>> all_maps(std::size_t domain, std::size_t codomain);

/// Every partial order on {0..n-1} (labelled), from all reflexive relations.
std::vector<Poset> partial_orders(std::size_t n);
/// One representative per isomorphism class.
std::vector<Poset> nonisomorphic_posets(std::size_t n);
/// Non-isomorphic posets of every size in [min_size, max_size].
std::vector<PosetRef> posets_up_to(std::size_t max_size, std::size_t min_size = 0);

/// Context whose incidence bit g * m_count + m is taken from `bits`.
FormalContext context_from_bits(std::size_t g_count, std::size_t m_count, std::uint64_t bits);
FormalContext random_context(std::size_t g_count, std::size_t m_count, std::mt19937_64& rng);

struct PropositionResult {
    std::string name;
    std::string statement;
    std::size_t instances = 0;
    std::size_t counterexamples = 0;
    std::string witness;
    double seconds = 0.0;

    [[nodiscard]] bool ok() const noexcept { return counterexamples == 0; }
};

struct SweepSpec {
    std::size_t max_poset_size = 3;
    std::size_t context_objects = 3;
    std::size_t context_attributes = 3;
    /// Empty selects every sweep.
    std::vector<std::string> propositions;
    std::uint64_t seed = 1;
    std::size_t samples = 10000;
    std::size_t random_contexts = 100;
};

struct CertificationReport {
    std::vector<PropositionResult> results;

    [[nodiscard]] bool ok() const noexcept;
};

PropositionResult sweep_bijection(std::size_t g_count, std::size_t m_count);
PropositionResult sweep_gc_definitions(std::size_t max_poset_size);
PropositionResult sweep_gc_structure(std::size_t max_poset_size);
PropositionResult sweep_pointwise_g(std::size_t max_poset_size);
PropositionResult sweep_order_equality(std::size_t g_count, std::size_t m_count);
PropositionResult sweep_extremal(std::size_t max_poset_size);
PropositionResult sweep_closure_refinement(std::size_t max_poset_size);
PropositionResult sweep_pq_nodes(std::size_t max_poset_size);
PropositionResult sweep_fiber(std::size_t max_poset_size);
PropositionResult sweep_protoconcept(std::size_t g_count, std::size_t m_count);
/// Exhaustive over all g x m contexts.
PropositionResult sweep_precon(std::size_t g_count, std::size_t m_count);
/// `count` seeded random g x m contexts.
PropositionResult sweep_precon_random(std::size_t count, std::size_t g_count, std::size_t m_count,
                                      std::uint64_t seed);
/// Precon checks on a single context (used for named fixtures).
PropositionResult sweep_precon_context(const FormalContext& ctx);
PropositionResult sweep_gm(std::size_t g_count, std::size_t m_count);
PropositionResult sweep_concepts(std::size_t g_count, std::size_t m_count);
PropositionResult sweep_concepts_context(const FormalContext& ctx);
PropositionResult sweep_embedding(std::size_t max_poset_size);
/// Exhaustive over connections on posets of at most `exhaustive_size`
/// elements, then `samples` random quadruples on posets of exactly `sampled_size`.
PropositionResult sweep_morphism(std::size_t exhaustive_size, std::size_t sampled_size, std::size_t samples,
                                 std::uint64_t seed);
PropositionResult sweep_initiality(std::size_t max_poset_size);
PropositionResult sweep_composition(std::size_t max_poset_size);

std::vector<std::string> sweep_names();

/// Runs the selected sweeps. Throws galcore::Error on an unknown name or when
/// a bound exceeds the exhaustive limits (posets 4, contexts 3x3).
CertificationReport sweep(const SweepSpec& spec);

nlohmann::json to_json(const CertificationReport& report);
std::string format_report(const CertificationReport& report);

} // namespace galcore::oracle
