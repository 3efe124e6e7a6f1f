#include "galcore/galois.hpp"

#include "galcore/error.hpp"

#include <algorithm>
#include <map>

namespace galcore {

GaloisConnection::GaloisConnection(PosetRef p, PosetRef q, std::vector<Element> f, std::vector<Element> g)
    : f_{p, q, std::move(f)}, g_{q, p, std::move(g)} {}

ValidationReport validate_gc(const GaloisConnection& gc) {
    ValidationReport report;
    const Poset& P = gc.P();
    const Poset& Q = gc.Q();
    const auto& f = gc.f();
    const auto& g = gc.g();
    for (Element x = 0; x < P.size(); ++x) {
        for (Element y = 0; y < P.size(); ++y) {
            if (P.leq(x, y) && !Q.leq(f(y), f(x))) {
                report.add("f-antitone", {x, y}, "f(" + P.label(y) + ") not below f(" + P.label(x) + ")");
            }
        }
    }
    for (Element x = 0; x < Q.size(); ++x) {
        for (Element y = 0; y < Q.size(); ++y) {
            if (Q.leq(x, y) && !P.leq(g(y), g(x))) {
                report.add("g-antitone", {x, y}, "g(" + Q.label(y) + ") not below g(" + Q.label(x) + ")");
            }
        }
    }
    for (Element p = 0; p < P.size(); ++p) {
        if (!P.leq(p, gc.close_p(p))) {
            report.add("p-extensive", {p}, P.label(p) + " not below gf(" + P.label(p) + ") = " + P.label(gc.close_p(p)));
        }
    }
    for (Element q = 0; q < Q.size(); ++q) {
        if (!Q.leq(q, gc.close_q(q))) {
            report.add("q-extensive", {q}, Q.label(q) + " not below fg(" + Q.label(q) + ") = " + Q.label(gc.close_q(q)));
        }
    }
    return report;
}

ValidationReport validate_gc_adjoint(const GaloisConnection& gc) {
    ValidationReport report;
    const Poset& P = gc.P();
    const Poset& Q = gc.Q();
    for (Element p = 0; p < P.size(); ++p) {
        for (Element q = 0; q < Q.size(); ++q) {
            const bool left = P.leq(p, gc.g()(q));
            const bool right = Q.leq(q, gc.f()(p));
            if (left != right) {
                report.add("adjunction", {p, q},
                           left ? P.label(p) + " <= g(" + Q.label(q) + ") but " + Q.label(q) + " not <= f(" +
                                      P.label(p) + ")"
                                : Q.label(q) + " <= f(" + P.label(p) + ") but " + P.label(p) + " not <= g(" +
                                      Q.label(q) + ")");
            }
        }
    }
    return report;
}

std::vector<Element> nodes(const GaloisConnection& gc, Side side) {
    std::vector<Element> out;
    if (side == Side::P) {
        for (Element p = 0; p < gc.P().size(); ++p) {
            if (gc.close_p(p) == p) {
                out.push_back(p);
            }
        }
    } else {
        for (Element q = 0; q < gc.Q().size(); ++q) {
            if (gc.close_q(q) == q) {
                out.push_back(q);
            }
        }
    }
    return out;
}

std::vector<Element> image(const GaloisConnection& gc, Side side) {
    const auto table = side == Side::P ? gc.g().table() : gc.f().table();
    std::vector<Element> out(table.begin(), table.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LeafDecomposition leaves(const GaloisConnection& gc, Side side) {
    const OrderMap& out_map = side == Side::P ? gc.f() : gc.g();
    const OrderMap& back_map = side == Side::P ? gc.g() : gc.f();
    const Poset& carrier = out_map.dom();

    std::map<Element, std::vector<Element>> fibers;
    for (Element x = 0; x < carrier.size(); ++x) {
        fibers[out_map(x)].push_back(x);
    }
    // A fiber's node is the image of its value under the opposite map.
    std::vector<std::pair<Element, std::vector<Element>>> ordered;
    for (auto& [value, members] : fibers) {
        ordered.emplace_back(back_map(value), std::move(members));
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    LeafDecomposition d;
    d.side = side;
    d.leaf_of.assign(carrier.size(), 0);
    for (auto& [node, members] : ordered) {
        for (Element x : members) {
            d.leaf_of[x] = d.leaves.size();
        }
        d.node_of_leaf.push_back(node);
        d.leaves.push_back(std::move(members));
    }

    std::vector<std::string> labels;
    for (Element node : d.node_of_leaf) {
        labels.push_back(carrier.label(node));
    }
    d.leaf_order = Poset::from_predicate(
        d.leaves.size(),
        [&](std::size_t a, std::size_t b) {
            for (Element x : d.leaves[a]) {
                for (Element y : d.leaves[b]) {
                    if (carrier.leq(x, y)) {
                        return true;
                    }
                }
            }
            return false;
        },
        std::move(labels));
    return d;
}

LeafCorrespondence leaf_antiiso(const LeafDecomposition& p_leaves, const LeafDecomposition& q_leaves,
                                const GaloisConnection& gc) {
    LeafCorrespondence c;
    for (Element node : p_leaves.node_of_leaf) {
        c.forward.push_back(q_leaves.leaf_of[gc.f()(node)]);
    }
    for (Element node : q_leaves.node_of_leaf) {
        c.backward.push_back(p_leaves.leaf_of[gc.g()(node)]);
    }
    return c;
}

LeafCorrespondence leaf_antiiso(const GaloisConnection& gc) {
    return leaf_antiiso(leaves(gc, Side::P), leaves(gc, Side::Q), gc);
}

AdjointResult derive_adjoint(const OrderMap& f) {
    AdjointResult result;
    const Poset& P = f.dom();
    const Poset& Q = f.cod();
    std::vector<Element> g(Q.size(), 0);
    std::vector<Element> above;
    for (Element q = 0; q < Q.size(); ++q) {
        above.clear();
        for (Element p = 0; p < P.size(); ++p) {
            if (Q.leq(q, f(p))) {
                above.push_back(p);
            }
        }
        if (auto j = join(P, above)) {
            g[q] = *j;
        } else {
            result.missing_joins.push_back(q);
        }
    }
    if (!result.missing_joins.empty()) {
        return result;
    }
    GaloisConnection candidate{f.dom_ref(), f.cod_ref(), {f.table().begin(), f.table().end()}, std::move(g)};
    result.failure = validate_gc(candidate);
    if (result.failure.ok()) {
        result.connection = std::move(candidate);
    }
    return result;
}

bool is_perfect(const GaloisConnection& gc) {
    return nodes(gc, Side::P).size() == gc.P().size() && nodes(gc, Side::Q).size() == gc.Q().size();
}

ValidationReport idempotence_check(const GaloisConnection& gc) {
    ValidationReport report;
    const auto& f = gc.f();
    const auto& g = gc.g();
    for (Element p = 0; p < gc.P().size(); ++p) {
        if (f(g(f(p))) != f(p)) {
            report.add("fgf=f", {p}, "fgf(" + gc.P().label(p) + ") = " + gc.Q().label(f(g(f(p)))) + " but f(" +
                                         gc.P().label(p) + ") = " + gc.Q().label(f(p)));
        }
    }
    for (Element q = 0; q < gc.Q().size(); ++q) {
        if (g(f(g(q))) != g(q)) {
            report.add("gfg=g", {q}, "gfg(" + gc.Q().label(q) + ") = " + gc.P().label(g(f(g(q)))) + " but g(" +
                                         gc.Q().label(q) + ") = " + gc.P().label(g(q)));
        }
    }
    return report;
}

bool node_lattice_complete(const GaloisConnection& gc, Side side) {
    const Poset& carrier = side == Side::P ? gc.P() : gc.Q();
    const auto fixed = nodes(gc, side);
    return is_complete_lattice(induced(carrier, fixed));
}

} // namespace galcore
