#include "galcore/oracle.hpp"

#include "galcore/category.hpp"
#include "galcore/error.hpp"
#include "galcore/ordering.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace galcore::oracle {

namespace {

struct Abort {};

class Tally {
  public:
    Tally(std::string name, std::string statement) {
        result_.name = std::move(name);
        result_.statement = std::move(statement);
    }

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++result_.instances;
        if (!ok) {
            result_.counterexamples = 1;
            result_.witness = describe();
            throw Abort{};
        }
    }

    void count(std::size_t n = 1) { result_.instances += n; }

    PropositionResult& result() { return result_; }

  private:
    PropositionResult result_;
};

template <class Body>
PropositionResult run(std::string name, std::string statement, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    Tally tally{std::move(name), std::move(statement)};
    try {
        body(tally);
    } catch (const Abort&) {
    } catch (const std::exception& e) {
        tally.result().counterexamples += 1;
        tally.result().witness = std::string{"unexpected exception: "} + e.what();
    }
    auto& r = tally.result();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(r);
}

std::string describe_table(std::span<const Element> t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i != 0) {
            s += ',';
        }
        s += std::to_string(t[i]);
    }
    return s + "]";
}

std::string describe_poset(const Poset& p) {
    std::string s = "n=" + std::to_string(p.size()) + " {";
    bool first = true;
    for (Element x = 0; x < p.size(); ++x) {
        for (Element y = 0; y < p.size(); ++y) {
            if (p.lt(x, y)) {
                if (!first) {
                    s += ',';
                }
                first = false;
                s += std::to_string(x) + "<" + std::to_string(y);
            }
        }
    }
    return s + "}";
}

std::string describe_gc(const GaloisConnection& gc) {
    return "P=" + describe_poset(gc.P()) + " Q=" + describe_poset(gc.Q()) + " f=" + describe_table(gc.f().table()) +
           " g=" + describe_table(gc.g().table());
}

std::string describe_context(const FormalContext& ctx) {
    std::string s = std::to_string(ctx.object_count()) + "x" + std::to_string(ctx.attribute_count()) + " [";
    for (Element g = 0; g < ctx.object_count(); ++g) {
        if (g != 0) {
            s += ' ';
        }
        for (Element m = 0; m < ctx.attribute_count(); ++m) {
            s += ctx.incident(g, m) ? 'x' : '.';
        }
    }
    return s + "]";
}

std::string describe_pc(Preconcept pc) {
    return "(" + format_subset(pc.objects) + "," + format_subset(pc.attributes) + ")";
}

bool naive_antitone(const Poset& dom, const Poset& cod, std::span<const Element> f) {
    for (Element x = 0; x < dom.size(); ++x) {
        for (Element y = 0; y < dom.size(); ++y) {
            if (dom.leq(x, y) && !cod.leq(f[y], f[x])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<Element>> antitone_maps(const Poset& dom, const Poset& cod) {
    std::vector<std::vector<Element>> out;
    for (auto& m : all_maps(dom.size(), cod.size())) {
        if (naive_antitone(dom, cod, m)) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::uint64_t count_contexts(std::size_t g, std::size_t m) {
    if (g * m >= 20) {
        throw CapExceeded("exhaustive context sweeps are limited to 20 incidence bits");
    }
    return std::uint64_t{1} << (g * m);
}

// Brute-force concept membership of Precon(C, D) as a bitmask over concept indices.
std::uint64_t precon_mask(const std::vector<Concept>& concepts, Preconcept pc) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        if (is_subset(pc.objects, concepts[i].extent) && is_subset(pc.attributes, concepts[i].intent)) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return mask;
}

std::vector<Preconcept> naive_preconcepts(const FormalContext& ctx) {
    std::vector<Preconcept> out;
    for (Subset c = 0; c <= ctx.all_objects(); ++c) {
        const Subset h = naive_H(ctx, c);
        for (Subset d = 0; d <= ctx.all_attributes(); ++d) {
            if (is_subset(d, h)) {
                out.push_back({c, d});
            }
        }
    }
    return out;
}

Subset naive_closure_objects(const FormalContext& ctx, Subset c) { return naive_K(ctx, naive_H(ctx, c)); }
Subset naive_closure_attributes(const FormalContext& ctx, Subset d) { return naive_H(ctx, naive_K(ctx, d)); }

struct GcGroup {
    PosetRef p;
    PosetRef q;
    std::vector<GaloisConnection> gcs;
};

using GroupList = std::vector<GcGroup>;

// Every connection between every pair of non-isomorphic posets with sizes in
// [min_size, max_size]. Shared across sweeps since several reuse size 4.
const GroupList& gc_groups(std::size_t max_size, std::size_t min_size = 0) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<GroupList>> cache;
    const std::lock_guard lock{mutex};
    auto& slot = cache[{max_size, min_size}];
    if (!slot) {
        auto groups = std::make_unique<GroupList>();
        const auto posets = posets_up_to(max_size, min_size);
        for (const auto& p : posets) {
            for (const auto& q : posets) {
                groups->push_back({p, q, enumerate_gcs(p, q)});
            }
        }
        slot = std::move(groups);
    }
    return *slot;
}

std::vector<GaloisConnection> flatten(const GroupList& groups) {
    std::vector<GaloisConnection> out;
    for (const auto& grp : groups) {
        out.insert(out.end(), grp.gcs.begin(), grp.gcs.end());
    }
    return out;
}

bool naive_squares(const GaloisConnection& src, const GaloisConnection& dst, std::span<const Element> h,
                   std::span<const Element> k) {
    for (Element p = 0; p < src.P().size(); ++p) {
        if (k[src.f()(p)] != dst.f()(h[p])) {
            return false;
        }
    }
    for (Element q = 0; q < src.Q().size(); ++q) {
        if (h[src.g()(q)] != dst.g()(k[q])) {
            return false;
        }
    }
    return true;
}

void check_side(Tally& t, const GaloisConnection& gc, Side side) {
    const bool on_p = side == Side::P;
    const Poset& X = on_p ? gc.P() : gc.Q();
    const Poset& Y = on_p ? gc.Q() : gc.P();
    const OrderMap& out = on_p ? gc.f() : gc.g();
    const OrderMap& back = on_p ? gc.g() : gc.f();
    const auto who = [&] { return std::string{side_name(side)} + " side of " + describe_gc(gc); };

    // fixed points are exactly the image of the incoming map
    std::vector<Element> fixed;
    std::set<Element> img;
    for (Element x = 0; x < X.size(); ++x) {
        if (back(out(x)) == x) {
            fixed.push_back(x);
        }
    }
    for (Element y = 0; y < Y.size(); ++y) {
        img.insert(back(y));
    }
    const auto ns = nodes(gc, side);
    t.check(ns == fixed, [&] { return "nodes differ from fixed points on " + who(); });
    t.check(image(gc, side) == std::vector<Element>(img.begin(), img.end()),
            [&] { return "image differs on " + who(); });
    t.check(std::vector<Element>(img.begin(), img.end()) == fixed,
            [&] { return "image is not the fixed-point set on " + who(); });

    // fibers of the outgoing map, one node each, the node is the maximum
    std::map<Element, std::vector<Element>> fibers;
    for (Element x = 0; x < X.size(); ++x) {
        fibers[out(x)].push_back(x);
    }
    const auto lv = leaves(gc, side);
    t.check(lv.leaves.size() == fibers.size() && lv.leaves.size() == ns.size(),
            [&] { return "leaf count mismatch on " + who(); });
    std::set<std::vector<Element>> expected;
    for (const auto& [value, members] : fibers) {
        expected.insert(members);
    }
    for (std::size_t i = 0; i < lv.leaves.size(); ++i) {
        const auto& leaf = lv.leaves[i];
        t.check(expected.count(leaf) == 1, [&] { return "leaf " + describe_table(leaf) + " is no fiber on " + who(); });
        const Element node = lv.node_of_leaf[i];
        std::size_t fixed_in_leaf = 0;
        for (Element x : leaf) {
            fixed_in_leaf += back(out(x)) == x ? 1 : 0;
            t.check(X.leq(x, node), [&] { return "node is not the maximum of its leaf on " + who(); });
            t.check(lv.leaf_of[x] == i, [&] { return "leaf_of inconsistent on " + who(); });
        }
        t.check(fixed_in_leaf == 1 && back(out(node)) == node,
                [&] { return "leaf without exactly one fixed point on " + who(); });
    }

    // leaf order is a partial order isomorphic to the node order
    t.check(validate_poset(lv.leaf_order).ok(), [&] { return "leaf order is not a partial order on " + who(); });
    for (std::size_t i = 0; i < lv.leaves.size(); ++i) {
        for (std::size_t j = 0; j < lv.leaves.size(); ++j) {
            bool some = false;
            for (Element a : lv.leaves[i]) {
                for (Element b : lv.leaves[j]) {
                    some = some || X.leq(a, b);
                }
            }
            t.check(lv.leaf_order.leq(i, j) == some && some == X.leq(lv.node_of_leaf[i], lv.node_of_leaf[j]),
                    [&] { return "leaf order differs from node order on " + who(); });
        }
    }

    // out restricted to nodes is an order-reversing bijection with inverse back
    std::set<Element> targets;
    for (Element a : ns) {
        targets.insert(out(a));
        t.check(back(out(a)) == a, [&] { return "restriction is not inverted on " + who(); });
        for (Element b : ns) {
            t.check(X.leq(a, b) == Y.leq(out(b), out(a)), [&] { return "restriction is not order-reversing on " + who(); });
        }
    }
    const auto other = nodes(gc, on_p ? Side::Q : Side::P);
    t.check(std::vector<Element>(targets.begin(), targets.end()) == other,
            [&] { return "restriction is not onto the opposite nodes on " + who(); });

    // a complete lattice on either side makes both node sets complete
    if (is_complete_lattice(gc.P()) || is_complete_lattice(gc.Q())) {
        t.check(node_lattice_complete(gc, side), [&] { return "node set is not a complete lattice on " + who(); });
    }

    // the join formula reproduces the opposite map
    for (Element y = 0; y < Y.size(); ++y) {
        std::vector<Element> below;
        for (Element x = 0; x < X.size(); ++x) {
            if (Y.leq(y, out(x))) {
                below.push_back(x);
            }
        }
        const auto j = join(X, below);
        t.check(j.has_value() && *j == back(y), [&] { return "join formula fails at " + std::to_string(y) + " on " + who(); });
    }
}

void check_precon_context(Tally& t, const FormalContext& ctx) {
    const auto concepts = brute_concepts(ctx, 4);
    const auto lattice = enumerate_concepts(ctx);
    const auto pcs = naive_preconcepts(ctx);
    const auto who = [&](Preconcept pc) { return describe_pc(pc) + " in " + describe_context(ctx); };

    std::vector<std::uint64_t> masks;
    masks.reserve(pcs.size());
    for (const auto pc : pcs) {
        const auto mask = precon_mask(concepts, pc);
        masks.push_back(mask);
        std::vector<Concept> by_def;
        for (std::size_t i = 0; i < concepts.size(); ++i) {
            if (contains(mask, i)) {
                by_def.push_back(concepts[i]);
            }
        }
        auto lib = precon_members(lattice, ctx, pc);
        auto by_interval = precon_members_by_interval(lattice, ctx, pc);
        std::sort(lib.begin(), lib.end());
        std::sort(by_interval.begin(), by_interval.end());
        t.check(!by_def.empty(), [&] { return "empty Precon for " + who(pc); });
        t.check(lib == by_def, [&] { return "precon_members differs from the definition for " + who(pc); });
        t.check(by_interval == by_def, [&] { return "interval membership differs for " + who(pc); });

        // endpoints: least and greatest member by extent inclusion
        const Concept* least = nullptr;
        const Concept* greatest = nullptr;
        for (const auto& c : by_def) {
            const bool lo = std::all_of(by_def.begin(), by_def.end(), [&](const Concept& o) { return is_subset(c.extent, o.extent); });
            const bool hi = std::all_of(by_def.begin(), by_def.end(), [&](const Concept& o) { return is_subset(o.extent, c.extent); });
            least = lo ? &c : least;
            greatest = hi ? &c : greatest;
        }
        const auto iv = precon_interval(ctx, pc);
        t.check(least != nullptr && greatest != nullptr && iv.bottom == *least && iv.top == *greatest,
                [&] { return "interval endpoints wrong for " + who(pc); });
        const Subset kh = naive_closure_objects(ctx, pc.objects);
        const Subset kd = naive_K(ctx, pc.attributes);
        t.check(iv.bottom == Concept{kh, naive_H(ctx, pc.objects)} &&
                    iv.top == Concept{kd, naive_closure_attributes(ctx, pc.attributes)},
                [&] { return "interval endpoints are not the closures for " + who(pc); });

        // Precon is a complete lattice under extent inclusion
        const auto sub = Poset::from_predicate(by_def.size(), [&](std::size_t a, std::size_t b) {
            return is_subset(by_def[a].extent, by_def[b].extent);
        });
        t.check(is_complete_lattice(sub), [&] { return "Precon is not a complete lattice for " + who(pc); });

        // singleton Precon and the closure equalities
        const bool single = by_def.size() == 1;
        t.check(single == (kh == kd) && single == (naive_H(ctx, pc.objects) == naive_closure_attributes(ctx, pc.attributes)) &&
                    single == is_protoconcept(ctx, pc),
                [&] { return "singleton Precon disagrees with the closure tests for " + who(pc); });

        // exactly one concept above iff (K(D), H(C)) is a concept, which is then that concept
        const Concept candidate{kd, naive_H(ctx, pc.objects)};
        const bool candidate_is_concept = naive_H(ctx, candidate.extent) == candidate.intent &&
                                          naive_K(ctx, candidate.intent) == candidate.extent;
        t.check(single == candidate_is_concept && (!single || by_def.front() == candidate),
                [&] { return "unique-concept characterization fails for " + who(pc); });
    }

    for (std::size_t a = 0; a < pcs.size(); ++a) {
        bool maximal = true;
        for (std::size_t b = 0; b < pcs.size(); ++b) {
            const bool inclusion = is_subset(masks[b], masks[a]);
            const bool sq = is_subset(pcs[a].objects, pcs[b].objects) && is_subset(pcs[a].attributes, pcs[b].attributes);
            maximal = maximal && (!sq || a == b);
            t.check(preconcept_preceq(ctx, pcs[a], pcs[b]) == inclusion,
                    [&] { return "preceq disagrees with Precon inclusion for " + who(pcs[a]) + " vs " + describe_pc(pcs[b]); });
            t.check(preconcept_equiv(ctx, pcs[a], pcs[b]) == (masks[a] == masks[b]),
                    [&] { return "equivalence disagrees with Precon equality for " + who(pcs[a]) + " vs " + describe_pc(pcs[b]); });
            t.check(preconcept_sq_leq(pcs[a], pcs[b]) == sq && (!sq || inclusion),
                    [&] { return "anti-monotonicity fails for " + who(pcs[a]) + " vs " + describe_pc(pcs[b]); });
        }
        t.check(!maximal || cardinality(masks[a]) == 1, [&] { return "maximal preconcept with several concepts: " + who(pcs[a]); });
    }
}

void check_gm_context(Tally& t, const FormalContext& ctx) {
    const auto concepts = brute_concepts(ctx, 4);
    const auto pcs = naive_preconcepts(ctx);
    const auto q = gm_quotient(ctx);
    const auto who = [&] { return describe_context(ctx); };

    // brute partition of the preconcepts by equal Precon sets
    std::map<std::uint64_t, LeafPair> classes;
    for (const auto pc : pcs) {
        const LeafPair lp{naive_closure_objects(ctx, pc.objects), naive_closure_attributes(ctx, pc.attributes)};
        const auto [it, fresh] = classes.emplace(precon_mask(concepts, pc), lp);
        t.check(fresh || it->second == lp, [&] { return "equal Precon sets with different leaf pairs in " + who(); });
        t.check(leaf_pair_of(ctx, pc) == lp, [&] { return "leaf_pair_of wrong for " + describe_pc(pc) + " in " + who(); });
    }
    std::set<LeafPair> brute;
    for (const auto& [mask, lp] : classes) {
        brute.insert(lp);
    }
    t.check(q.elements.size() == classes.size() && std::set<LeafPair>(q.elements.begin(), q.elements.end()) == brute,
            [&] { return "quotient elements differ from the brute partition in " + who(); });
    t.check(validate_poset(q.order).ok(), [&] { return "quotient order is not a partial order in " + who(); });

    // admissibility against the two readings of leaf-pair membership
    std::vector<Subset> ext_nodes;
    std::vector<Subset> int_nodes;
    for (const auto& c : concepts) {
        ext_nodes.push_back(c.extent);
        int_nodes.push_back(c.intent);
    }
    for (const Subset e : ext_nodes) {
        for (const Subset f : int_nodes) {
            bool all = true;
            bool any = false;
            for (Subset c = 0; c <= ctx.all_objects(); ++c) {
                if (naive_closure_objects(ctx, c) != e) {
                    continue;
                }
                for (Subset d = 0; d <= ctx.all_attributes(); ++d) {
                    if (naive_closure_attributes(ctx, d) != f) {
                        continue;
                    }
                    const bool pre = is_subset(d, naive_H(ctx, c));
                    all = all && pre;
                    any = any || pre;
                }
            }
            const LeafPair lp{e, f};
            t.check(gm_admissible(ctx, lp) == all && all == any && all == (brute.count(lp) == 1),
                    [&] { return "admissibility of (" + format_subset(e) + "," + format_subset(f) + ") wrong in " + who(); });
        }
    }

    // order isomorphic to Precon inclusion between classes
    std::vector<std::uint64_t> mask_of(q.elements.size());
    for (const auto& [mask, lp] : classes) {
        mask_of[q.index_of(lp).value()] = mask;
    }
    for (std::size_t a = 0; a < q.elements.size(); ++a) {
        for (std::size_t b = 0; b < q.elements.size(); ++b) {
            t.check(q.order.leq(a, b) == is_subset(mask_of[b], mask_of[a]),
                    [&] { return "quotient order differs from Precon inclusion in " + who(); });
        }
    }
}

void check_concepts_context(Tally& t, const FormalContext& ctx) {
    const auto brute = brute_concepts(ctx, 4);
    const auto lattice = enumerate_concepts(ctx);
    t.check(lattice.concepts == brute, [&] { return "concept sets differ for " + describe_context(ctx); });
    const std::size_t n = brute.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            t.check(lattice.order.leq(a, b) == is_subset(brute[a].extent, brute[b].extent) &&
                        lattice.order.leq(a, b) == is_subset(brute[b].intent, brute[a].intent),
                    [&] { return "lattice order wrong for " + describe_context(ctx); });
        }
    }
    t.check(is_complete_lattice(lattice.order), [&] { return "not a complete lattice: " + describe_context(ctx); });
    if (n <= 10) {
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            const auto elems = members(s);
            t.check(join(lattice.order, elems).has_value() && meet(lattice.order, elems).has_value(),
                    [&] { return "subset " + format_subset(s) + " lacks a join or meet in " + describe_context(ctx); });
        }
    }
}

void check_composable(Tally& t, const GalMorphism& second, const GalMorphism& first) {
    const auto c = compose(second, first);
    std::vector<Element> h(first.h().size());
    std::vector<Element> k(first.k().size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] = second.h()[first.h()[i]];
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        k[i] = second.k()[first.k()[i]];
    }
    t.check(std::equal(h.begin(), h.end(), c.h().begin(), c.h().end()) &&
                std::equal(k.begin(), k.end(), c.k().begin(), c.k().end()) && naive_squares(first.src(), second.dst(), h, k),
            [&] { return "composite wrong from " + describe_gc(first.src()) + " to " + describe_gc(second.dst()); });
}

bool same_tables(const GalMorphism& a, const GalMorphism& b) {
    return std::ranges::equal(a.h(), b.h()) && std::ranges::equal(a.k(), b.k());
}

} // namespace

Subset naive_H(const FormalContext& ctx, Subset objects) {
    Subset out = 0;
    for (Element m = 0; m < ctx.attribute_count(); ++m) {
        bool all = true;
        for (Element g = 0; g < ctx.object_count(); ++g) {
            if (contains(objects, g) && !ctx.incident(g, m)) {
                all = false;
            }
        }
        if (all) {
            out |= singleton(m);
        }
    }
    return out;
}

Subset naive_K(const FormalContext& ctx, Subset attributes) {
    Subset out = 0;
    for (Element g = 0; g < ctx.object_count(); ++g) {
        bool all = true;
        for (Element m = 0; m < ctx.attribute_count(); ++m) {
            if (contains(attributes, m) && !ctx.incident(g, m)) {
                all = false;
            }
        }
        if (all) {
            out |= singleton(g);
        }
    }
    return out;
}

std::vector<Concept> brute_concepts(const FormalContext& ctx, std::size_t max_carrier) {
    if (ctx.object_count() > max_carrier || ctx.attribute_count() > max_carrier) {
        throw CapExceeded("brute_concepts: carriers limited to " + std::to_string(max_carrier) + " elements");
    }
    std::vector<Concept> out;
    for (Subset a = 0; a <= ctx.all_objects(); ++a) {
        for (Subset b = 0; b <= ctx.all_attributes(); ++b) {
            if (naive_H(ctx, a) == b && naive_K(ctx, b) == a) {
                out.push_back({a, b});
            }
        }
    }
    return out;
}

bool naive_is_gc(const Poset& p, const Poset& q, std::span<const Element> f, std::span<const Element> g) {
    if (!naive_antitone(p, q, f) || !naive_antitone(q, p, g)) {
        return false;
    }
    for (Element x = 0; x < p.size(); ++x) {
        if (!p.leq(x, g[f[x]])) {
            return false;
        }
    }
    for (Element y = 0; y < q.size(); ++y) {
        if (!q.leq(y, f[g[y]])) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<std::vector<Element>, std::vector<Element>>> brute_gcs(const Poset& p, const Poset& q) {
    std::vector<std::pair<std::vector<Element>, std::vector<Element>>> out;
    const auto fs = all_maps(p.size(), q.size());
    const auto gs = all_maps(q.size(), p.size());
    for (const auto& f : fs) {
        for (const auto& g : gs) {
            if (naive_is_gc(p, q, f, g)) {
                out.emplace_back(f, g);
            }
        }
    }
    return out;
}

std::vector<std::vector<Element>> all_maps(std::size_t domain, std::size_t codomain) {
    if (domain == 0) {
        return {{}};
    }
    if (codomain == 0) {
        return {};
    }
    double total = 1;
    for (std::size_t i = 0; i < domain; ++i) {
        total *= static_cast<double>(codomain);
    }
    if (total > 1e7) {
        throw CapExceeded("all_maps: " + std::to_string(codomain) + "^" + std::to_string(domain) + " maps");
    }
    std::vector<std::vector<Element>> out;
    std::vector<Element> cur(domain, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = domain;
        while (i > 0 && cur[i - 1] + 1 == codomain) {
            cur[--i] = 0;
        }
        if (i == 0) {
            break;
        }
        ++cur[i - 1];
    }
    return out;
}

std::vector<Poset> partial_orders(std::size_t n) {
    if (n > 5) {
        throw CapExceeded("partial_orders: at most 5 elements");
    }
    std::vector<std::pair<Element, Element>> cells;
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (x != y) {
                cells.emplace_back(x, y);
            }
        }
    }
    std::vector<Poset> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells.size()); ++bits) {
        std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
        for (Element x = 0; x < n; ++x) {
            r[x][x] = true;
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (contains(bits, c)) {
                r[cells[c].first][cells[c].second] = true;
            }
        }
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x) {
            for (Element y = 0; y < n && ok; ++y) {
                if (x != y && r[x][y] && r[y][x]) {
                    ok = false;
                }
                for (Element z = 0; z < n && ok; ++z) {
                    if (r[x][y] && r[y][z] && !r[x][z]) {
                        ok = false;
                    }
                }
            }
        }
        if (ok) {
            out.push_back(Poset::from_matrix(r));
        }
    }
    return out;
}

std::vector<Poset> nonisomorphic_posets(std::size_t n) {
    std::vector<Element> perm(n);
    std::set<std::uint64_t> seen;
    std::vector<Poset> out;
    for (const auto& p : partial_orders(n)) {
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t canonical = ~std::uint64_t{0};
        do {
            std::uint64_t code = 0;
            for (Element x = 0; x < n; ++x) {
                for (Element y = 0; y < n; ++y) {
                    if (p.leq(perm[x], perm[y])) {
                        code |= singleton(x * n + y);
                    }
                }
            }
            canonical = std::min(canonical, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(canonical).second) {
            out.push_back(p);
        }
    }
    return out;
}

std::vector<PosetRef> posets_up_to(std::size_t max_size, std::size_t min_size) {
    std::vector<PosetRef> out;
    for (std::size_t n = min_size; n <= max_size; ++n) {
        for (auto& p : nonisomorphic_posets(n)) {
            out.push_back(share(std::move(p)));
        }
    }
    return out;
}

FormalContext context_from_bits(std::size_t g_count, std::size_t m_count, std::uint64_t bits) {
    FormalContext ctx{g_count, m_count};
    for (Element g = 0; g < g_count; ++g) {
        for (Element m = 0; m < m_count; ++m) {
            if (contains(bits, g * m_count + m)) {
                ctx.set_incident(g, m);
            }
        }
    }
    return ctx;
}

FormalContext random_context(std::size_t g_count, std::size_t m_count, std::mt19937_64& rng) {
    std::bernoulli_distribution coin{0.5};
    FormalContext ctx{g_count, m_count};
    for (Element g = 0; g < g_count; ++g) {
        for (Element m = 0; m < m_count; ++m) {
            ctx.set_incident(g, m, coin(rng));
        }
    }
    return ctx;
}

bool CertificationReport::ok() const noexcept {
    return std::all_of(results.begin(), results.end(), [](const PropositionResult& r) { return r.ok(); });
}

PropositionResult sweep_bijection(std::size_t g_count, std::size_t m_count) {
    return run("bijection", "relation_of(polarity_of(R)) = R and polarity_of is injective", [&](Tally& t) {
        const auto total = count_contexts(g_count, m_count);
        const std::size_t cap = std::max(g_count, m_count);
        std::set<std::pair<std::vector<Element>, std::vector<Element>>> seen;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            const auto ctx = context_from_bits(g_count, m_count, bits);
            const auto pol = polarity_of(ctx).materialize(cap);
            t.check(pol.has_value(), [&] { return "polarity not materializable: " + describe_context(ctx); });
            t.check(validate_gc(*pol).ok(), [&] { return "polarity is not a connection: " + describe_context(ctx); });
            t.check(relation_of(*pol) == ctx, [&] { return "roundtrip changed " + describe_context(ctx); });
            seen.emplace(std::vector<Element>(pol->f().table().begin(), pol->f().table().end()),
                         std::vector<Element>(pol->g().table().begin(), pol->g().table().end()));
        }
        t.check(seen.size() == total, [&] { return "two relations share a polarity"; });
    });
}

PropositionResult sweep_gc_definitions(std::size_t max_poset_size) {
    return run("gc-definitions", "antitone-extensive definition <=> adjunction definition", [&](Tally& t) {
        const auto posets = posets_up_to(max_poset_size);
        for (const auto& p : posets) {
            for (const auto& q : posets) {
                const auto fs = antitone_maps(*p, *q);
                const auto gs = antitone_maps(*q, *p);
                for (const auto& f : fs) {
                    for (const auto& g : gs) {
                        const GaloisConnection gc{p, q, f, g};
                        const bool a = validate_gc(gc).ok();
                        const bool b = validate_gc_adjoint(gc).ok();
                        const bool c = naive_is_gc(*p, *q, f, g);
                        t.check(a == b && b == c, [&] { return "definitions disagree on " + describe_gc(gc); });
                    }
                }
            }
        }
    });
}

PropositionResult sweep_gc_structure(std::size_t max_poset_size) {
    return run("gc-structure", "idempotence, fixed points, fibers, anti-isomorphic nodes and leaves, uniqueness",
               [&](Tally& t) {
                   for (const auto& grp : gc_groups(max_poset_size)) {
                       const auto brute = brute_gcs(*grp.p, *grp.q);
                       std::vector<std::pair<std::vector<Element>, std::vector<Element>>> lib;
                       for (const auto& gc : grp.gcs) {
                           lib.emplace_back(std::vector<Element>(gc.f().table().begin(), gc.f().table().end()),
                                            std::vector<Element>(gc.g().table().begin(), gc.g().table().end()));
                       }
                       t.check(lib == brute, [&] {
                           return "enumerate_gcs differs from brute force on P=" + describe_poset(*grp.p) +
                                  " Q=" + describe_poset(*grp.q);
                       });
                       for (const auto& gc : grp.gcs) {
                           t.check(idempotence_check(gc).ok(), [&] { return "idempotence fails: " + describe_gc(gc); });
                           check_side(t, gc, Side::P);
                           check_side(t, gc, Side::Q);
                           const auto corr = leaf_antiiso(gc);
                           const auto lp = leaves(gc, Side::P);
                           const auto lq = leaves(gc, Side::Q);
                           for (std::size_t i = 0; i < corr.forward.size(); ++i) {
                               t.check(corr.backward[corr.forward[i]] == i,
                                       [&] { return "leaf correspondence not inverse: " + describe_gc(gc); });
                               for (std::size_t j = 0; j < corr.forward.size(); ++j) {
                                   t.check(lp.leaf_order.leq(i, j) == lq.leaf_order.leq(corr.forward[j], corr.forward[i]),
                                           [&] { return "leaf correspondence not order-reversing: " + describe_gc(gc); });
                               }
                           }
                           const auto derived = derive_adjoint(gc.f());
                           t.check(derived.connection.has_value() && *derived.connection == gc,
                                   [&] { return "derive_adjoint does not recover g: " + describe_gc(gc); });
                       }
                   }
               });
}

PropositionResult sweep_pointwise_g(std::size_t max_poset_size) {
    return run("pointwise-g", "f1 <= f2 pointwise <=> g1 <= g2 pointwise", [&](Tally& t) {
        for (const auto& grp : gc_groups(max_poset_size)) {
            for (const auto& a : grp.gcs) {
                for (const auto& b : grp.gcs) {
                    t.check(le_pointwise(a, b).holds == le_pointwise_via_g(a, b).holds,
                            [&] { return "f and g routes disagree: " + describe_gc(a) + " vs " + describe_gc(b); });
                }
            }
        }
    });
}

PropositionResult sweep_order_equality(std::size_t g_count, std::size_t m_count) {
    return run("order-equality", "R1 within R2 <=> polarity(R1) <= polarity(R2) pointwise", [&](Tally& t) {
        const auto total = count_contexts(g_count, m_count);
        const std::size_t cap = std::max(g_count, m_count);
        std::vector<FormalContext> ctxs;
        std::vector<GaloisConnection> pols;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            ctxs.push_back(context_from_bits(g_count, m_count, bits));
            pols.push_back(*polarity_of(ctxs.back()).materialize(cap));
        }
        for (std::size_t a = 0; a < total; ++a) {
            for (std::size_t b = 0; b < total; ++b) {
                const bool naive = is_subset(a, b);
                t.check(le_relation(ctxs[a], ctxs[b]).holds == naive && le_pointwise(pols[a], pols[b]).holds == naive,
                        [&] { return "orders disagree: " + describe_context(ctxs[a]) + " vs " + describe_context(ctxs[b]); });
            }
        }
    });
}

PropositionResult sweep_extremal(std::size_t max_poset_size) {
    return run("extremal", "constant-to-top connection is greatest, bottom-collapsing connection is least",
               [&](Tally& t) {
                   for (const auto& grp : gc_groups(max_poset_size)) {
                       const auto ex = extremal_gcs(grp.p, grp.q);
                       const auto ctx = [&] { return "P=" + describe_poset(*grp.p) + " Q=" + describe_poset(*grp.q); };
                       if (ex.greatest) {
                           t.check(validate_gc(*ex.greatest).ok(), [&] { return "greatest is no connection on " + ctx(); });
                           for (const auto& gc : grp.gcs) {
                               t.check(le_pointwise(gc, *ex.greatest).holds && preceq_P(*ex.greatest, gc).holds,
                                       [&] { return "greatest is not above " + describe_gc(gc); });
                           }
                       }
                       if (ex.least) {
                           t.check(validate_gc(*ex.least).ok(), [&] { return "least is no connection on " + ctx(); });
                           for (const auto& gc : grp.gcs) {
                               t.check(le_pointwise(*ex.least, gc).holds, [&] { return "least is not below " + describe_gc(gc); });
                           }
                       }
                       const auto tb_p = top_bottom(*grp.p);
                       const auto tb_q = top_bottom(*grp.q);
                       t.check(ex.greatest.has_value() == (tb_p.top.has_value() && tb_q.top.has_value()),
                               [&] { return "greatest existence wrong on " + ctx(); });
                   }
               });
}

PropositionResult sweep_closure_refinement(std::size_t max_poset_size) {
    return run("closure-refinement", "closure inequality <=> node inclusion <=> leaf refinement, on both sides",
               [&](Tally& t) {
                   for (const auto& grp : gc_groups(max_poset_size)) {
                       for (const auto& a : grp.gcs) {
                           for (const auto& b : grp.gcs) {
                               const bool p1 = preceq_P(a, b).holds;
                               const bool p2 = preceq_P_by_nodes(a, b).holds;
                               const bool p3 = preceq_P_by_refinement(a, b).holds;
                               const bool q1 = preceq_Q(a, b).holds;
                               const bool q2 = preceq_Q_by_nodes(a, b).holds;
                               const bool q3 = preceq_Q_by_refinement(a, b).holds;
                               t.check(p1 == p2 && p2 == p3 && q1 == q2 && q2 == q3, [&] {
                                   return "characterizations disagree: " + describe_gc(a) + " vs " + describe_gc(b);
                               });
                           }
                       }
                   }
               });
}

PropositionResult sweep_pq_nodes(std::size_t max_poset_size) {
    return run("pq-nodes", "combined pre-order <=> node inclusion on both sides; perfect implies maximal",
               [&](Tally& t) {
                   for (const auto& grp : gc_groups(max_poset_size)) {
                       const std::size_t n = grp.gcs.size();
                       std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
                       for (std::size_t a = 0; a < n; ++a) {
                           for (std::size_t b = 0; b < n; ++b) {
                               const auto& x = grp.gcs[a];
                               const auto& y = grp.gcs[b];
                               rel[a][b] = preceq_PQ(x, y).holds;
                               t.check(rel[a][b] == sq_nodes(x, y).holds &&
                                           rel[a][b] == (preceq_P(x, y).holds && preceq_Q(x, y).holds),
                                       [&] { return "combined order disagrees: " + describe_gc(x) + " vs " + describe_gc(y); });
                           }
                       }
                       for (std::size_t a = 0; a < n; ++a) {
                           t.check(rel[a][a], [&] { return "not reflexive at " + describe_gc(grp.gcs[a]); });
                           for (std::size_t b = 0; b < n; ++b) {
                               t.check(preceq_PQ_equiv(grp.gcs[a], grp.gcs[b]) == (rel[a][b] && rel[b][a]),
                                       [&] { return "equivalence wrong at " + describe_gc(grp.gcs[a]); });
                               if (is_perfect(grp.gcs[a]) && rel[a][b]) {
                                   t.check(rel[b][a], [&] { return "perfect connection not maximal: " + describe_gc(grp.gcs[a]); });
                               }
                               if (closure_is_identity(grp.gcs[a]) && preceq_P(grp.gcs[a], grp.gcs[b]).holds) {
                                   t.check(preceq_P(grp.gcs[b], grp.gcs[a]).holds,
                                           [&] { return "identity closure not maximal: " + describe_gc(grp.gcs[a]); });
                               }
                               for (std::size_t c = 0; c < n; ++c) {
                                   t.check(!(rel[a][b] && rel[b][c]) || rel[a][c],
                                           [&] { return "not transitive at " + describe_gc(grp.gcs[a]); });
                               }
                           }
                       }
                   }
               });
}

PropositionResult sweep_fiber(std::size_t max_poset_size) {
    return run("fiber", "fiber order implies node inclusion for equal orders; constant-to-top and anti-isomorphisms are extremal",
               [&](Tally& t) {
                   const auto& groups = gc_groups(max_poset_size);
                   for (const auto& grp : groups) {
                       for (const auto& a : grp.gcs) {
                           for (const auto& b : grp.gcs) {
                               t.check(!fiber_leq(a, b).holds || sq_nodes(a, b).holds,
                                       [&] { return "fiber order without node inclusion: " + describe_gc(a) + " vs " + describe_gc(b); });
                           }
                       }
                   }
                   // across orders on carriers of equal sizes
                   for (const auto& ga : groups) {
                       for (const auto& a : ga.gcs) {
                           const auto ex = extremal_gcs(ga.p, ga.q);
                           const bool is_top = ex.greatest && *ex.greatest == a;
                           const bool anti = is_perfect(a) && a.P().size() == a.Q().size() &&
                                             nodes(a, Side::P).size() == a.P().size();
                           if (!is_top && !anti) {
                               continue;
                           }
                           for (const auto& gb : groups) {
                               if (gb.p->size() != ga.p->size() || gb.q->size() != ga.q->size()) {
                                   continue;
                               }
                               for (const auto& b : gb.gcs) {
                                   if (is_top && fiber_leq(b, a).holds) {
                                       t.check(fiber_leq(a, b).holds,
                                               [&] { return "constant-to-top not minimal against " + describe_gc(b); });
                                   }
                                   if (anti && fiber_leq(a, b).holds) {
                                       t.check(fiber_leq(b, a).holds,
                                               [&] { return "anti-isomorphism " + describe_gc(a) + " not maximal against " + describe_gc(b); });
                                   }
                               }
                           }
                       }
                   }
               });
}

PropositionResult sweep_protoconcept(std::size_t g_count, std::size_t m_count) {
    return run("protoconcept",
               "singleton Precon <=> KH(C)=K(D) <=> HK(D)=H(C) <=> (K(D),H(C)) concept <=> anti-isomorphic leaves",
               [&](Tally& t) {
                   const auto total = count_contexts(g_count, m_count);
                   const std::size_t cap = std::max(g_count, m_count);
                   for (std::uint64_t bits = 0; bits < total; ++bits) {
                       const auto ctx = context_from_bits(g_count, m_count, bits);
                       const auto concepts = brute_concepts(ctx, 4);
                       const auto pol = *polarity_of(ctx).materialize(cap);
                       const auto lp = leaves(pol, Side::P);
                       const auto lq = leaves(pol, Side::Q);
                       const auto corr = leaf_antiiso(lp, lq, pol);
                       for (const auto pc : naive_preconcepts(ctx)) {
                           const Subset kh = naive_closure_objects(ctx, pc.objects);
                           const Subset kd = naive_K(ctx, pc.attributes);
                           const Subset h = naive_H(ctx, pc.objects);
                           const Subset hk = naive_closure_attributes(ctx, pc.attributes);
                           const bool c2 = cardinality(precon_mask(concepts, pc)) == 1;
                           const bool c3 = corr.forward[lp.leaf_of[pc.objects]] == lq.leaf_of[pc.attributes];
                           const bool c4 = kh == kd;
                           const bool c5 = hk == h;
                           const bool c6 = naive_H(ctx, kd) == h && naive_K(ctx, h) == kd;
                           const bool c7 = Concept{kh, h} == Concept{kd, hk};
                           const bool lib = is_protoconcept(ctx, pc);
                           t.check(c2 == c3 && c3 == c4 && c4 == c5 && c5 == c6 && c6 == c7 && c7 == lib, [&] {
                               return "conditions disagree for " + describe_pc(pc) + " in " + describe_context(ctx);
                           });
                       }
                   }
               });
}

PropositionResult sweep_precon(std::size_t g_count, std::size_t m_count) {
    return run("precon", "Precon endpoints, interval membership, lattice structure and the preconcept pre-order",
               [&](Tally& t) {
                   const auto total = count_contexts(g_count, m_count);
                   for (std::uint64_t bits = 0; bits < total; ++bits) {
                       check_precon_context(t, context_from_bits(g_count, m_count, bits));
                   }
               });
}

PropositionResult sweep_precon_random(std::size_t count, std::size_t g_count, std::size_t m_count,
                                      std::uint64_t seed) {
    return run("precon-random", "Precon checks on seeded random contexts", [&](Tally& t) {
        std::mt19937_64 rng{seed};
        for (std::size_t i = 0; i < count; ++i) {
            check_precon_context(t, random_context(g_count, m_count, rng));
        }
    });
}

PropositionResult sweep_precon_context(const FormalContext& ctx) {
    return run("precon-context", "Precon checks on " + (ctx.name().empty() ? describe_context(ctx) : ctx.name()),
               [&](Tally& t) { check_precon_context(t, ctx); });
}

PropositionResult sweep_gm(std::size_t g_count, std::size_t m_count) {
    return run("gm", "leaf-pair quotient equals the brute partition of preconcepts with the induced order",
               [&](Tally& t) {
                   const auto total = count_contexts(g_count, m_count);
                   for (std::uint64_t bits = 0; bits < total; ++bits) {
                       check_gm_context(t, context_from_bits(g_count, m_count, bits));
                   }
               });
}

PropositionResult sweep_concepts(std::size_t g_count, std::size_t m_count) {
    return run("concepts", "NextClosure equals the literal filter; the concept lattice is complete", [&](Tally& t) {
        const auto total = count_contexts(g_count, m_count);
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            check_concepts_context(t, context_from_bits(g_count, m_count, bits));
        }
    });
}

PropositionResult sweep_concepts_context(const FormalContext& ctx) {
    return run("concepts-context", "concept checks on " + (ctx.name().empty() ? describe_context(ctx) : ctx.name()),
               [&](Tally& t) { check_concepts_context(t, ctx); });
}

PropositionResult sweep_embedding(std::size_t max_poset_size) {
    return run("embedding", "down-set embedding into a polarity is a monomorphism whose relation induces (F, G)",
               [&](Tally& t) {
                   for (const auto& gc : flatten(gc_groups(max_poset_size))) {
                       const auto emb = embed_into_polarity(gc, std::max(gc.P().size(), gc.Q().size()));
                       const auto& pol = emb.polarity;
                       const auto who = [&] { return describe_gc(gc); };
                       t.check(validate_gc(pol).ok(), [&] { return "embedded polarity is no connection for " + who(); });
                       t.check(is_gal_morphism(gc, pol, emb.morphism.h(), emb.morphism.k()).holds &&
                                   is_monomorphism(emb.morphism),
                               [&] { return "embedding is not a monomorphism for " + who(); });
                       for (Element p = 0; p < gc.P().size(); ++p) {
                           Subset down = 0;
                           for (Element x = 0; x < gc.P().size(); ++x) {
                               down |= gc.P().leq(x, p) ? singleton(x) : 0;
                           }
                           t.check(emb.morphism.h()[p] == down, [&] { return "i_P is not the down-set map for " + who(); });
                       }
                       const auto rel = embedding_relation(gc);
                       for (Subset a = 0; a <= full_subset(gc.P().size()); ++a) {
                           Subset expected = full_subset(gc.Q().size());
                           for_each_member(a, [&](Element p) {
                               Subset down = 0;
                               for (Element y = 0; y < gc.Q().size(); ++y) {
                                   down |= gc.Q().leq(y, gc.f()(p)) ? singleton(y) : 0;
                               }
                               expected &= down;
                           });
                           t.check(pol.f()(a) == expected && naive_H(rel, a) == expected,
                                   [&] { return "F differs at " + format_subset(a) + " for " + who(); });
                       }
                       for (Subset b = 0; b <= full_subset(gc.Q().size()); ++b) {
                           Subset expected = full_subset(gc.P().size());
                           for_each_member(b, [&](Element q) {
                               Subset down = 0;
                               for (Element x = 0; x < gc.P().size(); ++x) {
                                   down |= gc.P().leq(x, gc.g()(q)) ? singleton(x) : 0;
                               }
                               expected &= down;
                           });
                           t.check(pol.g()(b) == expected && naive_K(rel, b) == expected,
                                   [&] { return "G differs at " + format_subset(b) + " for " + who(); });
                       }
                       t.check(relation_of(pol) == rel, [&] { return "relation_of(embedding) differs for " + who(); });
                   }
               });
}

PropositionResult sweep_morphism(std::size_t exhaustive_size, std::size_t sampled_size, std::size_t samples,
                                 std::uint64_t seed) {
    return run("morphism", "commuting squares <=> nodes, levels and leaf pairs preserved <=> both paths agree",
               [&](Tally& t) {
                   const auto check = [&](const GaloisConnection& src, const GaloisConnection& dst,
                                          std::span<const Element> h, std::span<const Element> k) {
                       const auto ch = characterize_morphism(src, dst, h, k);
                       const bool naive = naive_squares(src, dst, h, k);
                       t.check(ch.commutes.holds == naive && ch.consistent() &&
                                   is_gal_morphism(src, dst, h, k).holds == naive,
                               [&] {
                                   return "characterizations disagree from " + describe_gc(src) + " to " + describe_gc(dst) +
                                          " h=" + describe_table(h) + " k=" + describe_table(k);
                               });
                   };
                   const auto small = flatten(gc_groups(exhaustive_size));
                   for (const auto& src : small) {
                       for (const auto& dst : small) {
                           const auto hs = all_maps(src.P().size(), dst.P().size());
                           const auto ks = all_maps(src.Q().size(), dst.Q().size());
                           for (const auto& h : hs) {
                               for (const auto& k : ks) {
                                   check(src, dst, h, k);
                               }
                           }
                       }
                   }
                   const auto sampled = flatten(gc_groups(sampled_size, sampled_size));
                   if (sampled.empty() || samples == 0) {
                       return;
                   }
                   std::mt19937_64 rng{seed};
                   std::uniform_int_distribution<std::size_t> pick{0, sampled.size() - 1};
                   std::uniform_int_distribution<Element> elem{0, sampled_size - 1};
                   for (std::size_t s = 0; s < samples; ++s) {
                       const auto& src = sampled[pick(rng)];
                       const auto& dst = sampled[pick(rng)];
                       std::vector<Element> h(sampled_size);
                       std::vector<Element> k(sampled_size);
                       for (auto& x : h) {
                           x = elem(rng);
                       }
                       for (auto& x : k) {
                           x = elem(rng);
                       }
                       // every fourth sample is steered onto a genuine morphism (the identity)
                       if (s % 4 == 0) {
                           std::iota(h.begin(), h.end(), 0);
                           std::iota(k.begin(), k.end(), 0);
                           check(src, src, h, k);
                       } else {
                           check(src, dst, h, k);
                       }
                   }
               });
}

PropositionResult sweep_initiality(std::size_t max_poset_size) {
    return run("initiality", "down-set embedding is initial against every probe connection", [&](Tally& t) {
        const auto probes = flatten(gc_groups(max_poset_size));
        std::size_t triggered = 0;
        for (const auto& gc : flatten(gc_groups(max_poset_size, 1))) {
            const auto emb = embed_into_polarity(gc, std::max(gc.P().size(), gc.Q().size()));
            const auto report = check_initiality(emb.morphism, probes);
            triggered += report.triggered;
            t.count(report.checked);
            t.check(report.ok(), [&] { return "initiality fails for " + describe_gc(gc) + ": " + report.first_violation; });
        }
        t.check(triggered > 0, [] { return "no probe triggered the initiality premise"; });
    });
}

PropositionResult sweep_composition(std::size_t max_poset_size) {
    return run("composition", "identities are neutral and composition is closed and associative", [&](Tally& t) {
        const auto gcs = flatten(gc_groups(max_poset_size));
        // all morphisms, grouped by source object
        std::vector<std::vector<GalMorphism>> out(gcs.size());
        std::vector<std::vector<std::size_t>> target(gcs.size());
        for (std::size_t s = 0; s < gcs.size(); ++s) {
            for (std::size_t d = 0; d < gcs.size(); ++d) {
                for (const auto& h : all_maps(gcs[s].P().size(), gcs[d].P().size())) {
                    for (const auto& k : all_maps(gcs[s].Q().size(), gcs[d].Q().size())) {
                        if (naive_squares(gcs[s], gcs[d], h, k)) {
                            out[s].emplace_back(gcs[s], gcs[d], h, k);
                            target[s].push_back(d);
                        }
                    }
                }
            }
        }
        const auto index_of = [&](const GaloisConnection& gc) {
            return static_cast<std::size_t>(std::find(gcs.begin(), gcs.end(), gc) - gcs.begin());
        };
        for (std::size_t s = 0; s < gcs.size(); ++s) {
            const auto id = identity(gcs[s]);
            t.check(is_monomorphism(id) && is_order_preserving(id), [&] { return "identity malformed at " + describe_gc(gcs[s]); });
            for (std::size_t i = 0; i < out[s].size(); ++i) {
                const auto& m = out[s][i];
                const auto& idd = identity(gcs[target[s][i]]);
                t.check(same_tables(compose(m, id), m) && same_tables(compose(idd, m), m),
                        [&] { return "identity not neutral at " + describe_gc(gcs[s]); });
                const std::size_t mid = target[s][i];
                // bounded fan-out keeps the triple count manageable
                const std::size_t fan = 6;
                for (std::size_t j = 0; j < std::min(fan, out[mid].size()); ++j) {
                    const auto& m2 = out[mid][j];
                    check_composable(t, m2, m);
                    const std::size_t last = index_of(m2.dst());
                    for (std::size_t l = 0; l < std::min(fan, out[last].size()); ++l) {
                        const auto& m3 = out[last][l];
                        t.check(same_tables(compose(m3, compose(m2, m)), compose(compose(m3, m2), m)),
                                [&] { return "composition not associative from " + describe_gc(gcs[s]); });
                    }
                }
            }
        }
        // mismatched endpoints must be refused
        if (gcs.size() >= 2) {
            for (std::size_t s = 0; s < gcs.size(); ++s) {
                for (const auto& m : out[s]) {
                    for (std::size_t d = 0; d < gcs.size(); ++d) {
                        if (out[d].empty() || gcs[d] == m.dst()) {
                            continue;
                        }
                        bool threw = false;
                        try {
                            (void)compose(out[d].front(), m);
                        } catch (const EndpointMismatch&) {
                            threw = true;
                        }
                        t.check(threw || out[d].front().src() == m.dst(),
                                [&] { return "mismatched composition accepted at " + describe_gc(gcs[s]); });
                        break;
                    }
                    break;
                }
            }
        }
    });
}

std::vector<std::string> sweep_names() {
    return {"bijection",  "gc-definitions", "gc-structure", "pointwise-g",   "order-equality", "extremal",
            "closure-refinement", "pq-nodes",    "fiber",   "protoconcept", "precon",        "gm",
            "concepts",   "embedding",      "morphism", "initiality", "composition"};
}

CertificationReport sweep(const SweepSpec& spec) {
    if (spec.max_poset_size > 4) {
        throw CapExceeded("exhaustive poset sweeps are limited to 4 elements");
    }
    if (spec.context_objects > 3 || spec.context_attributes > 3) {
        throw CapExceeded("exhaustive context sweeps are limited to 3x3");
    }
    const auto names = sweep_names();
    for (const auto& name : spec.propositions) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw Error("unknown proposition: " + name);
        }
    }
    const std::size_t n = spec.max_poset_size;
    const std::size_t g = spec.context_objects;
    const std::size_t m = spec.context_attributes;
    // the map-pair sweeps grow as |P|^|P| * |Q|^|Q| per connection pair
    const std::size_t small = std::min<std::size_t>(n, 3);
    const std::map<std::string, std::function<std::vector<PropositionResult>()>> table{
        {"bijection", [&] { return std::vector{sweep_bijection(g, m)}; }},
        {"gc-definitions", [&] { return std::vector{sweep_gc_definitions(std::min<std::size_t>(n, 3))}; }},
        {"gc-structure", [&] { return std::vector{sweep_gc_structure(n)}; }},
        {"pointwise-g", [&] { return std::vector{sweep_pointwise_g(n)}; }},
        {"order-equality", [&] { return std::vector{sweep_order_equality(g, m)}; }},
        {"extremal", [&] { return std::vector{sweep_extremal(n)}; }},
        {"closure-refinement", [&] { return std::vector{sweep_closure_refinement(n)}; }},
        {"pq-nodes", [&] { return std::vector{sweep_pq_nodes(n)}; }},
        {"fiber", [&] { return std::vector{sweep_fiber(n)}; }},
        {"protoconcept", [&] { return std::vector{sweep_protoconcept(g, m)}; }},
        {"precon",
         [&] {
             return std::vector{sweep_precon(g, m), sweep_precon_random(spec.random_contexts, 4, 4, spec.seed)};
         }},
        {"gm", [&] { return std::vector{sweep_gm(g, m)}; }},
        {"concepts", [&] { return std::vector{sweep_concepts(g, m)}; }},
        {"embedding", [&] { return std::vector{sweep_embedding(n)}; }},
        {"morphism", [&] { return std::vector{sweep_morphism(small, small, spec.samples, spec.seed)}; }},
        {"initiality", [&] { return std::vector{sweep_initiality(small)}; }},
        {"composition", [&] { return std::vector{sweep_composition(small)}; }},
    };
    CertificationReport report;
    for (const auto& name : names) {
        if (!spec.propositions.empty() &&
            std::find(spec.propositions.begin(), spec.propositions.end(), name) == spec.propositions.end()) {
            continue;
        }
        for (auto& r : table.at(name)()) {
            const bool failed = !r.ok();
            report.results.push_back(std::move(r));
            if (failed) {
                return report;
            }
        }
    }
    return report;
}

nlohmann::json to_json(const CertificationReport& report) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : report.results) {
        nlohmann::json entry{{"name", r.name},
                             {"statement", r.statement},
                             {"instances", r.instances},
                             {"counterexamples", r.counterexamples}};
        if (!r.ok()) {
            entry["witness"] = r.witness;
        }
        results.push_back(std::move(entry));
    }
    return {{"ok", report.ok()}, {"results", std::move(results)}};
}

std::string format_report(const CertificationReport& report) {
    std::ostringstream os;
    for (const auto& r : report.results) {
        os << (r.ok() ? "ok   " : "FAIL ") << r.name << "  instances=" << r.instances
           << "  counterexamples=" << r.counterexamples << '\n';
        if (!r.ok()) {
            os << "     witness: " << r.witness << '\n';
        }
    }
    os << (report.ok() ? "certified\n" : "not certified\n");
    return os.str();
}

} // namespace galcore::oracle
