#include "galcore/ordering.hpp"

#include "galcore/error.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace galcore {

namespace {

OrderVerdict holds(std::string_view via) { return {true, std::nullopt, via}; }

OrderVerdict fails(std::string_view via, Side side, Element e, std::string detail) {
    return {false, Witness{side, e, std::move(detail)}, via};
}

/// First element of `sub` missing from `super` (both ascending).
std::optional<Element> first_missing(const std::vector<Element>& sub, const std::vector<Element>& super) {
    for (Element x : sub) {
        if (!std::binary_search(super.begin(), super.end(), x)) {
            return x;
        }
    }
    return std::nullopt;
}

/// Leaves of b on `side` each lie inside one leaf of a.
OrderVerdict refinement(const GaloisConnection& a, const GaloisConnection& b, Side side, std::string_view via) {
    const auto coarse = leaves(a, side);
    const auto fine = leaves(b, side);
    for (const auto& leaf : fine.leaves) {
        const std::size_t host = coarse.leaf_of[leaf.front()];
        for (Element x : leaf) {
            if (coarse.leaf_of[x] != host) {
                const Poset& carrier = side == Side::P ? a.P() : a.Q();
                return fails(via, side, x,
                             "leaf of " + carrier.label(leaf.front()) + " in the second connection contains " +
                                 carrier.label(x) + " from a different leaf of the first");
            }
        }
    }
    return holds(via);
}

OrderVerdict node_inclusion(const GaloisConnection& a, const GaloisConnection& b, Side side, std::string_view via) {
    if (auto missing = first_missing(nodes(a, side), nodes(b, side))) {
        const Poset& carrier = side == Side::P ? a.P() : a.Q();
        return fails(via, side, *missing, carrier.label(*missing) + " is a node of the first connection only");
    }
    return holds(via);
}

} // namespace

std::string_view side_name(Side side) noexcept { return side == Side::P ? "P" : "Q"; }

void require_shared_carriers(const GaloisConnection& a, const GaloisConnection& b) {
    if (!same_poset(a.p_ref(), b.p_ref()) || !same_poset(a.q_ref(), b.q_ref())) {
        throw CarrierMismatch("connections do not share their posets P and Q");
    }
}

OrderVerdict le_pointwise(const GaloisConnection& a, const GaloisConnection& b) {
    require_shared_carriers(a, b);
    const Poset& P = a.P();
    const Poset& Q = a.Q();
    OrderVerdict v = holds("pointwise-f");
    for (Element p = 0; p < P.size(); ++p) {
        if (!Q.leq(a.f()(p), b.f()(p))) {
            v = fails("pointwise-f", Side::P, p,
                      "f1(" + P.label(p) + ") = " + Q.label(a.f()(p)) + " not <= " + Q.label(b.f()(p)) + " = f2(" +
                          P.label(p) + ")");
            break;
        }
    }
    assert(v.holds == le_pointwise_via_g(a, b).holds);
    return v;
}

OrderVerdict le_pointwise_via_g(const GaloisConnection& a, const GaloisConnection& b) {
    require_shared_carriers(a, b);
    const Poset& P = a.P();
    const Poset& Q = a.Q();
    for (Element q = 0; q < Q.size(); ++q) {
        if (!P.leq(a.g()(q), b.g()(q))) {
            return fails("pointwise-g", Side::Q, q,
                         "g1(" + Q.label(q) + ") = " + P.label(a.g()(q)) + " not <= " + P.label(b.g()(q)) + " = g2(" +
                             Q.label(q) + ")");
        }
    }
    return holds("pointwise-g");
}

OrderVerdict le_relation(const FormalContext& a, const FormalContext& b) {
    if (a.object_count() != b.object_count() || a.attribute_count() != b.attribute_count()) {
        throw CarrierMismatch("contexts have different carriers: " + std::to_string(a.object_count()) + "x" +
                              std::to_string(a.attribute_count()) + " vs " + std::to_string(b.object_count()) + "x" +
                              std::to_string(b.attribute_count()));
    }
    for (Element g = 0; g < a.object_count(); ++g) {
        const Subset extra = a.row(g) & ~b.row(g);
        if (extra != 0) {
            const auto m = static_cast<Element>(std::countr_zero(extra));
            return fails("relation", Side::P, g,
                         "(" + a.object_labels()[g] + "," + a.attribute_labels()[m] + ") only in the first relation");
        }
    }
    return holds("relation");
}

ExtremalConnections extremal_gcs(const PosetRef& p, const PosetRef& q) {
    ExtremalConnections out;
    const auto [top_p, bottom_p] = top_bottom(*p);
    const auto [top_q, bottom_q] = top_bottom(*q);
    if (!top_p || !top_q) {
        return out;
    }
    out.greatest.emplace(p, q, std::vector<Element>(p->size(), *top_q), std::vector<Element>(q->size(), *top_p));
    if (!bottom_p || !bottom_q) {
        return out;
    }
    std::vector<Element> f(p->size());
    std::vector<Element> g(q->size());
    for (Element x = 0; x < p->size(); ++x) {
        f[x] = x == *bottom_p ? *top_q : *bottom_q;
    }
    for (Element y = 0; y < q->size(); ++y) {
        g[y] = y == *bottom_q ? *top_p : *bottom_p;
    }
    out.least.emplace(p, q, std::move(f), std::move(g));
    return out;
}

OrderVerdict preceq_P(const GaloisConnection& a, const GaloisConnection& b) {
    require_shared_carriers(a, b);
    const Poset& P = a.P();
    OrderVerdict v = holds("closure-P");
    for (Element p = 0; p < P.size(); ++p) {
        const Element second = b.close_p(p);
        const Element first = a.close_p(p);
        if (!P.leq(second, first)) {
            v = fails("closure-P", Side::P, p,
                      "g2f2(" + P.label(p) + ") = " + P.label(second) + " not <= " + P.label(first) + " = g1f1(" +
                          P.label(p) + ")");
            break;
        }
    }
    assert(v.holds == preceq_P_by_nodes(a, b).holds);
    return v;
}

OrderVerdict preceq_P_by_nodes(const GaloisConnection& a, const GaloisConnection& b) {
    require_shared_carriers(a, b);
    return node_inclusion(a, b, Side::P, "nodes-P");
}

OrderVerdict preceq_P_by_refinement(const GaloisConnection& a, const GaloisConnection& b) {
    require_shared_carriers(a, b);
    return refinement(a, b, Side::P, "refinement-P");
}

OrderVerdict preceq_Q(const GaloisConnection& a, const GaloisConnection& b) {
    require_shared_carriers(a, b);
    const Poset& Q = a.Q();
    OrderVerdict v = holds("closure-Q");
    for (Element q = 0; q < Q.size(); ++q) {
        const Element second = b.close_q(q);
        const Element first = a.close_q(q);
        if (!Q.leq(second, first)) {
            v = fails("closure-Q", Side::Q, q,
                      "f2g2(" + Q.label(q) + ") = " + Q.label(second) + " not <= " + Q.label(first) + " = f1g1(" +
                          Q.label(q) + ")");
            break;
        }
    }
    assert(v.holds == preceq_Q_by_nodes(a, b).holds);
    return v;
}

OrderVerdict preceq_Q_by_nodes(const GaloisConnection& a, const GaloisConnection& b) {
    require_shared_carriers(a, b);
    return node_inclusion(a, b, Side::Q, "nodes-Q");
}

OrderVerdict preceq_Q_by_refinement(const GaloisConnection& a, const GaloisConnection& b) {
    require_shared_carriers(a, b);
    return refinement(a, b, Side::Q, "refinement-Q");
}

OrderVerdict preceq_PQ(const GaloisConnection& a, const GaloisConnection& b) {
    auto v = preceq_P(a, b);
    if (!v.holds) {
        v.via = "closure-PQ";
        return v;
    }
    v = preceq_Q(a, b);
    v.via = "closure-PQ";
    return v;
}

bool preceq_PQ_equiv(const GaloisConnection& a, const GaloisConnection& b) {
    return preceq_PQ(a, b).holds && preceq_PQ(b, a).holds;
}

OrderVerdict sq_nodes(const GaloisConnection& a, const GaloisConnection& b) {
    require_shared_carriers(a, b);
    auto v = node_inclusion(a, b, Side::P, "nodes-PQ");
    if (!v.holds) {
        return v;
    }
    return node_inclusion(a, b, Side::Q, "nodes-PQ");
}

bool closure_is_identity(const GaloisConnection& gc) {
    for (Element p = 0; p < gc.P().size(); ++p) {
        if (gc.close_p(p) != p) {
            return false;
        }
    }
    return true;
}

OrderVerdict fiber_leq(const GaloisConnection& a, const GaloisConnection& b) {
    if (a.P().size() != b.P().size() || a.Q().size() != b.Q().size()) {
        throw CarrierMismatch("fiber comparison needs equal carrier sets: " + std::to_string(a.P().size()) + "/" +
                              std::to_string(a.Q().size()) + " vs " + std::to_string(b.P().size()) + "/" +
                              std::to_string(b.Q().size()));
    }
    // With h and k the identities the squares read f1 = f2 and g1 = g2.
    for (Element p = 0; p < a.P().size(); ++p) {
        if (a.f()(p) != b.f()(p)) {
            return fails("identity-morphism", Side::P, p, "f1(" + a.P().label(p) + ") differs from f2(" +
                                                               b.P().label(p) + ")");
        }
    }
    for (Element q = 0; q < a.Q().size(); ++q) {
        if (a.g()(q) != b.g()(q)) {
            return fails("identity-morphism", Side::Q, q, "g1(" + a.Q().label(q) + ") differs from g2(" +
                                                               b.Q().label(q) + ")");
        }
    }
    return holds("identity-morphism");
}

std::vector<GaloisConnection> enumerate_gcs(const PosetRef& p, const PosetRef& q, double budget) {
    const Poset& P = *p;
    const Poset& Q = *q;
    if (std::pow(static_cast<double>(Q.size()), static_cast<double>(P.size())) > budget) {
        throw CapExceeded("enumerating maps " + std::to_string(P.size()) + " -> " + std::to_string(Q.size()) +
                          " exceeds the enumeration budget");
    }
    std::vector<GaloisConnection> out;
    std::vector<Element> f(P.size(), 0);
    // Depth-first over f(0), f(1), ... keeping only choices that stay antitone
    // against already assigned elements, so tables come out lexicographically.
    auto extend = [&](auto& self, Element x) -> void {
        if (x == P.size()) {
            auto adjoint = derive_adjoint(OrderMap{p, q, f});
            if (adjoint.connection) {
                out.push_back(std::move(*adjoint.connection));
            }
            return;
        }
        for (Element y = 0; y < Q.size(); ++y) {
            bool ok = true;
            for (Element w = 0; w < x && ok; ++w) {
                if (P.leq(w, x) && !Q.leq(y, f[w])) {
                    ok = false;
                }
                if (P.leq(x, w) && !Q.leq(f[w], y)) {
                    ok = false;
                }
            }
            if (ok) {
                f[x] = y;
                self(self, x + 1);
            }
        }
    };
    extend(extend, 0);
    return out;
}

} // namespace galcore
