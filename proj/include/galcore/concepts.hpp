#pragma once

#include "galcore/context.hpp"
#include "galcore/poset.hpp"

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace galcore {

struct Concept {
    Subset extent = 0;
    Subset intent = 0;

    friend auto operator<=>(const Concept&, const Concept&) = default;
};

/// Pair (C, D) of an object set and an attribute set.
struct Preconcept {
    Subset objects = 0;
    Subset attributes = 0;

    friend auto operator<=>(const Preconcept&, const Preconcept&) = default;
};

struct ConceptLattice {
    /// Ascending by extent bitmask, which is the lectic order NextClosure produces.
    std::vector<Concept> concepts;
    /// (A, B) <= (A', B') iff A is within A'.
    Poset order;

    [[nodiscard]] std::optional<std::size_t> index_of_extent(Subset extent) const;
    [[nodiscard]] std::optional<std::size_t> index_of_intent(Subset intent) const;
};

bool is_concept(const FormalContext& ctx, Subset extent, Subset intent);

/// All closed extents in lectic order, via NextClosure on K o H.
std::vector<Subset> closed_extents(const FormalContext& ctx);

ConceptLattice enumerate_concepts(const FormalContext& ctx);

/// D within H(C), equivalently C within K(D).
bool is_preconcept(const FormalContext& ctx, Preconcept pc);

/// KH(C) = K(D). Throws NotPreconcept when (C, D) is not a preconcept.
bool is_protoconcept(const FormalContext& ctx, Preconcept pc);

struct PreconInterval {
    Concept bottom;
    Concept top;
};

/// Smallest (KH(C), H(C)) and largest (K(D), HK(D)) concepts above (C, D).
PreconInterval precon_interval(const FormalContext& ctx, Preconcept pc);

/// Concepts (A, B) with C within A and D within B, in lattice order.
std::vector<Concept> precon_members(const ConceptLattice& lattice, const FormalContext& ctx, Preconcept pc);
std::vector<Concept> precon_members(const FormalContext& ctx, Preconcept pc);

/// Concepts whose extent lies in [KH(C), K(D)].
std::vector<Concept> precon_members_by_interval(const ConceptLattice& lattice, const FormalContext& ctx,
                                                Preconcept pc);

/// Componentwise inclusion.
bool preconcept_sq_leq(Preconcept a, Preconcept b) noexcept;

/// K(D') within K(D) and H(C') within H(C). Throws NotPreconcept.
bool preconcept_preceq(const FormalContext& ctx, Preconcept a, Preconcept b);

/// KH(C) = KH(C') and HK(D) = HK(D'). Throws NotPreconcept.
bool preconcept_equiv(const FormalContext& ctx, Preconcept a, Preconcept b);

/// An element of the quotient of preconcepts by their equivalence, named by
/// the nodes of its two leaves: the closed extent KH(C) and the closed intent HK(D).
struct LeafPair {
    Subset extent_node = 0;
    Subset intent_node = 0;

    friend auto operator<=>(const LeafPair&, const LeafPair&) = default;
};

struct GMQuotient {
    /// Ascending by (extent_node, intent_node).
    std::vector<LeafPair> elements;
    /// (E, F) <= (E', F') iff K*(F') <= K*(F) and H*(E') <= H*(E).
    Poset order;

    [[nodiscard]] std::optional<std::size_t> index_of(LeafPair e) const;
};

/// Leaf pair of a preconcept. Throws NotPreconcept.
LeafPair leaf_pair_of(const FormalContext& ctx, Preconcept pc);

/// Admissibility of a pair of leaves given by their nodes: E <= K*(F).
bool gm_admissible(const FormalContext& ctx, LeafPair e);

GMQuotient gm_quotient(const FormalContext& ctx);

/// Every subset of the chosen carrier whose closure is `node`. Exponential,
/// so restricted to carriers of at most `max_carrier` elements (CapExceeded).
std::vector<Subset> leaf_members(const FormalContext& ctx, Side side, Subset node, std::size_t max_carrier = 4);

} // namespace galcore
