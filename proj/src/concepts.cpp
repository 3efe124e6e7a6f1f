#include "galcore/concepts.hpp"

#include "galcore/error.hpp"

#include <algorithm>

namespace galcore {

namespace {

void require_preconcept(const FormalContext& ctx, Preconcept pc) {
    if (!is_preconcept(ctx, pc)) {
        throw NotPreconcept("(" + format_subset(pc.objects, ctx.object_labels()) + ", " +
                            format_subset(pc.attributes, ctx.attribute_labels()) +
                            ") is not a preconcept: D is not within H(C)");
    }
}

template <class T, class Key>
std::optional<std::size_t> find_sorted(const std::vector<T>& items, Key key, auto proj) {
    auto it = std::lower_bound(items.begin(), items.end(), key,
                               [&](const T& item, const Key& k) { return proj(item) < k; });
    if (it == items.end() || proj(*it) != key) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - items.begin());
}

} // namespace

std::optional<std::size_t> ConceptLattice::index_of_extent(Subset extent) const {
    return find_sorted(concepts, extent, [](const Concept& c) { return c.extent; });
}

std::optional<std::size_t> ConceptLattice::index_of_intent(Subset intent) const {
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        if (concepts[i].intent == intent) {
            return i;
        }
    }
    return std::nullopt;
}

bool is_concept(const FormalContext& ctx, Subset extent, Subset intent) {
    return H(ctx, extent) == intent && K(ctx, intent) == extent;
}

std::vector<Subset> closed_extents(const FormalContext& ctx) {
    const std::size_t n = ctx.object_count();
    std::vector<Subset> out;
    Subset current = closure_GG(ctx, 0);
    out.push_back(current);
    const Subset everything = ctx.all_objects();
    // Element i carries weight 2^i, so the lectic successor is found by trying
    // the least significant position first and keeping everything above it.
    while (current != everything) {
        bool advanced = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (contains(current, i)) {
                continue;
            }
            const Subset high = ~full_subset(i + 1);
            const Subset candidate = closure_GG(ctx, (current & high) | singleton(i));
            if ((candidate & high) == (current & high)) {
                current = candidate;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            break;
        }
        out.push_back(current);
    }
    return out;
}

ConceptLattice enumerate_concepts(const FormalContext& ctx) {
    ConceptLattice lattice;
    for (Subset extent : closed_extents(ctx)) {
        lattice.concepts.push_back({extent, H(ctx, extent)});
    }
    const auto& cs = lattice.concepts;
    std::vector<std::string> labels;
    labels.reserve(cs.size());
    for (const auto& c : cs) {
        labels.push_back(format_subset(c.extent, ctx.object_labels()));
    }
    lattice.order = Poset::from_predicate(
        cs.size(), [&](Element a, Element b) { return is_subset(cs[a].extent, cs[b].extent); }, std::move(labels));
    return lattice;
}

bool is_preconcept(const FormalContext& ctx, Preconcept pc) {
    return is_subset(pc.attributes, H(ctx, pc.objects));
}

bool is_protoconcept(const FormalContext& ctx, Preconcept pc) {
    require_preconcept(ctx, pc);
    return closure_GG(ctx, pc.objects) == K(ctx, pc.attributes);
}

PreconInterval precon_interval(const FormalContext& ctx, Preconcept pc) {
    require_preconcept(ctx, pc);
    const Subset intent_low = H(ctx, pc.objects);
    const Subset extent_high = K(ctx, pc.attributes);
    return {{K(ctx, intent_low), intent_low}, {extent_high, H(ctx, extent_high)}};
}

std::vector<Concept> precon_members(const ConceptLattice& lattice, const FormalContext& ctx, Preconcept pc) {
    require_preconcept(ctx, pc);
    std::vector<Concept> out;
    for (const auto& c : lattice.concepts) {
        if (is_subset(pc.objects, c.extent) && is_subset(pc.attributes, c.intent)) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<Concept> precon_members(const FormalContext& ctx, Preconcept pc) {
    return precon_members(enumerate_concepts(ctx), ctx, pc);
}

std::vector<Concept> precon_members_by_interval(const ConceptLattice& lattice, const FormalContext& ctx,
                                                Preconcept pc) {
    const auto [bottom, top] = precon_interval(ctx, pc);
    std::vector<Concept> out;
    for (const auto& c : lattice.concepts) {
        if (is_subset(bottom.extent, c.extent) && is_subset(c.extent, top.extent)) {
            out.push_back(c);
        }
    }
    return out;
}

bool preconcept_sq_leq(Preconcept a, Preconcept b) noexcept {
    return is_subset(a.objects, b.objects) && is_subset(a.attributes, b.attributes);
}

bool preconcept_preceq(const FormalContext& ctx, Preconcept a, Preconcept b) {
    require_preconcept(ctx, a);
    require_preconcept(ctx, b);
    return is_subset(K(ctx, b.attributes), K(ctx, a.attributes)) && is_subset(H(ctx, b.objects), H(ctx, a.objects));
}

bool preconcept_equiv(const FormalContext& ctx, Preconcept a, Preconcept b) {
    require_preconcept(ctx, a);
    require_preconcept(ctx, b);
    return closure_GG(ctx, a.objects) == closure_GG(ctx, b.objects) &&
           closure_MM(ctx, a.attributes) == closure_MM(ctx, b.attributes);
}

std::optional<std::size_t> GMQuotient::index_of(LeafPair e) const {
    return find_sorted(elements, e, [](const LeafPair& x) { return x; });
}

LeafPair leaf_pair_of(const FormalContext& ctx, Preconcept pc) {
    require_preconcept(ctx, pc);
    return {closure_GG(ctx, pc.objects), closure_MM(ctx, pc.attributes)};
}

bool gm_admissible(const FormalContext& ctx, LeafPair e) {
    // K*(F) is the leaf whose node is K(intent_node); leaf order is node inclusion.
    return is_subset(e.extent_node, K(ctx, e.intent_node));
}

GMQuotient gm_quotient(const FormalContext& ctx) {
    const auto lattice = enumerate_concepts(ctx);
    GMQuotient q;
    for (const auto& low : lattice.concepts) {
        for (const auto& high : lattice.concepts) {
            const LeafPair e{low.extent, high.intent};
            if (gm_admissible(ctx, e)) {
                q.elements.push_back(e);
            }
        }
    }
    std::sort(q.elements.begin(), q.elements.end());
    const auto& es = q.elements;
    std::vector<std::string> labels;
    for (const auto& e : es) {
        labels.push_back("(" + format_subset(e.extent_node, ctx.object_labels()) + "," +
                         format_subset(e.intent_node, ctx.attribute_labels()) + ")");
    }
    q.order = Poset::from_predicate(
        es.size(),
        [&](Element a, Element b) {
            return is_subset(K(ctx, es[b].intent_node), K(ctx, es[a].intent_node)) &&
                   is_subset(H(ctx, es[b].extent_node), H(ctx, es[a].extent_node));
        },
        std::move(labels));
    return q;
}

std::vector<Subset> leaf_members(const FormalContext& ctx, Side side, Subset node, std::size_t max_carrier) {
    const std::size_t n = side == Side::P ? ctx.object_count() : ctx.attribute_count();
    if (n > max_carrier) {
        throw CapExceeded("leaf listing enumerates 2^" + std::to_string(n) + " subsets; limit is 2^" +
                          std::to_string(max_carrier));
    }
    std::vector<Subset> out;
    for (Subset s = 0; s < (Subset{1} << n); ++s) {
        const Subset closed = side == Side::P ? closure_GG(ctx, s) : closure_MM(ctx, s);
        if (closed == node) {
            out.push_back(s);
        }
    }
    return out;
}

} // namespace galcore
