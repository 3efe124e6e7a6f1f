#include "galcore/category.hpp"

#include "galcore/error.hpp"

#include <cmath>
#include <set>

namespace galcore {

namespace {

void check_tables(const GaloisConnection& src, const GaloisConnection& dst, std::span<const Element> h,
                  std::span<const Element> k) {
    auto check = [](std::span<const Element> t, std::size_t dom, std::size_t cod, const char* name) {
        if (t.size() != dom) {
            throw DimensionMismatch(std::string(name) + " has " + std::to_string(t.size()) + " entries, expected " +
                                    std::to_string(dom));
        }
        for (Element x : t) {
            if (x >= cod) {
                throw DimensionMismatch(std::string(name) + " maps into " + std::to_string(x) + ", outside " +
                                        std::to_string(cod));
            }
        }
    };
    check(h, src.P().size(), dst.P().size(), "h");
    check(k, src.Q().size(), dst.Q().size(), "k");
}

OrderVerdict ok(std::string_view via) { return {true, std::nullopt, via}; }

OrderVerdict fail(std::string_view via, Side side, Element e, std::string detail) {
    return {false, Witness{side, e, std::move(detail)}, via};
}

OrderVerdict squares(const GaloisConnection& src, const GaloisConnection& dst, std::span<const Element> h,
                     std::span<const Element> k) {
    for (Element p = 0; p < src.P().size(); ++p) {
        if (k[src.f()(p)] != dst.f()(h[p])) {
            return fail("squares", Side::P, p,
                        "k(f1(" + src.P().label(p) + ")) = " + dst.Q().label(k[src.f()(p)]) + " but f2(h(" +
                            src.P().label(p) + ")) = " + dst.Q().label(dst.f()(h[p])));
        }
    }
    for (Element q = 0; q < src.Q().size(); ++q) {
        if (h[src.g()(q)] != dst.g()(k[q])) {
            return fail("squares", Side::Q, q,
                        "h(g1(" + src.Q().label(q) + ")) = " + dst.P().label(h[src.g()(q)]) + " but g2(k(" +
                            src.Q().label(q) + ")) = " + dst.P().label(dst.g()(k[q])));
        }
    }
    return ok("squares");
}

} // namespace

GalMorphism::GalMorphism(GaloisConnection src, GaloisConnection dst, std::vector<Element> h, std::vector<Element> k)
    : src_{std::move(src)}, dst_{std::move(dst)}, h_{std::move(h)}, k_{std::move(k)} {
    auto v = is_gal_morphism(src_, dst_, h_, k_);
    if (!v.holds) {
        throw InvalidMorphism("not a Gal-morphism: " + v.witness->detail);
    }
}

OrderVerdict is_gal_morphism(const GaloisConnection& src, const GaloisConnection& dst, std::span<const Element> h,
                             std::span<const Element> k) {
    check_tables(src, dst, h, k);
    return squares(src, dst, h, k);
}

MorphismCharacterization characterize_morphism(const GaloisConnection& src, const GaloisConnection& dst,
                                               std::span<const Element> h, std::span<const Element> k) {
    check_tables(src, dst, h, k);
    MorphismCharacterization c;
    c.commutes = squares(src, dst, h, k);

    const auto src_p = leaves(src, Side::P);
    const auto src_q = leaves(src, Side::Q);
    const auto dst_p = leaves(dst, Side::P);
    const auto dst_q = leaves(dst, Side::Q);
    const auto src_pairs = leaf_antiiso(src_p, src_q, src);
    const auto dst_pairs = leaf_antiiso(dst_p, dst_q, dst);

    c.preserves_nodes = ok("nodes");
    for (Element p : nodes(src, Side::P)) {
        if (dst.close_p(h[p]) != h[p]) {
            c.preserves_nodes = fail("nodes", Side::P, p, "h sends node " + src.P().label(p) + " to non-node " +
                                                              dst.P().label(h[p]));
            break;
        }
    }
    if (c.preserves_nodes.holds) {
        for (Element q : nodes(src, Side::Q)) {
            if (dst.close_q(k[q]) != k[q]) {
                c.preserves_nodes = fail("nodes", Side::Q, q, "k sends node " + src.Q().label(q) + " to non-node " +
                                                                  dst.Q().label(k[q]));
                break;
            }
        }
    }

    c.preserves_levels = ok("levels");
    auto check_levels = [&](const LeafDecomposition& from, const LeafDecomposition& to, std::span<const Element> map,
                            Side side) {
        for (const auto& leaf : from.leaves) {
            const std::size_t target = to.leaf_of[map[leaf.front()]];
            for (Element x : leaf) {
                if (to.leaf_of[map[x]] != target) {
                    c.preserves_levels = fail("levels", side, x, "leaf mates are sent to different leaves");
                    return;
                }
            }
        }
    };
    check_levels(src_p, dst_p, h, Side::P);
    if (c.preserves_levels.holds) {
        check_levels(src_q, dst_q, k, Side::Q);
    }

    // Leaf pairs (E, F) are anti-isomorphic iff f*(E) = F.
    c.preserves_leaf_pairs = ok("leaf-pairs");
    for (Element p = 0; p < src.P().size() && c.preserves_leaf_pairs.holds; ++p) {
        for (Element q = 0; q < src.Q().size(); ++q) {
            if (src_pairs.forward[src_p.leaf_of[p]] != src_q.leaf_of[q]) {
                continue;
            }
            if (dst_pairs.forward[dst_p.leaf_of[h[p]]] != dst_q.leaf_of[k[q]]) {
                c.preserves_leaf_pairs = fail("leaf-pairs", Side::P, p,
                                              "(" + src.P().label(p) + "," + src.Q().label(q) +
                                                  ") lie in paired leaves but their images do not");
                break;
            }
        }
    }

    c.paths_agree = ok("paths");
    auto check_paths = [&](const LeafDecomposition& from, Side side) {
        for (const auto& leaf : from.leaves) {
            std::set<Element> targets;
            for (Element x : leaf) {
                if (side == Side::P) {
                    targets.insert(k[src.f()(x)]);
                    targets.insert(dst.f()(h[x]));
                } else {
                    targets.insert(h[src.g()(x)]);
                    targets.insert(dst.g()(k[x]));
                }
            }
            const Element t = *targets.begin();
            const bool fixed = side == Side::P ? dst.close_q(t) == t : dst.close_p(t) == t;
            if (targets.size() != 1 || !fixed) {
                c.paths_agree = fail("paths", side, leaf.front(),
                                     "the two paths do not send this leaf to a single fixed point");
                return;
            }
        }
    };
    check_paths(src_p, Side::P);
    if (c.paths_agree.holds) {
        check_paths(src_q, Side::Q);
    }
    return c;
}

bool is_monomorphism(const GalMorphism& m) noexcept {
    auto injective = [](std::span<const Element> t) {
        std::set<Element> seen(t.begin(), t.end());
        return seen.size() == t.size();
    };
    return injective(m.h()) && injective(m.k());
}

bool is_order_preserving(const GalMorphism& m) {
    return is_monotone(OrderMap{m.src().p_ref(), m.dst().p_ref(), {m.h().begin(), m.h().end()}}) &&
           is_monotone(OrderMap{m.src().q_ref(), m.dst().q_ref(), {m.k().begin(), m.k().end()}});
}

GalMorphism identity(const GaloisConnection& gc) {
    std::vector<Element> h(gc.P().size());
    std::vector<Element> k(gc.Q().size());
    for (Element x = 0; x < h.size(); ++x) {
        h[x] = x;
    }
    for (Element y = 0; y < k.size(); ++y) {
        k[y] = y;
    }
    return GalMorphism{gc, gc, std::move(h), std::move(k)};
}

GalMorphism compose(const GalMorphism& second, const GalMorphism& first) {
    if (!(first.dst() == second.src())) {
        throw EndpointMismatch("cannot compose: the first morphism's target is not the second's source");
    }
    std::vector<Element> h(first.h().size());
    std::vector<Element> k(first.k().size());
    for (Element x = 0; x < h.size(); ++x) {
        h[x] = second.h()[first.h()[x]];
    }
    for (Element y = 0; y < k.size(); ++y) {
        k[y] = second.k()[first.k()[y]];
    }
    return GalMorphism{first.src(), second.dst(), std::move(h), std::move(k)};
}

Embedding embed_into_polarity(const GaloisConnection& gc, std::size_t cap) {
    const Poset& P = gc.P();
    const Poset& Q = gc.Q();
    if (P.size() > cap || Q.size() > cap) {
        throw CapExceeded("embedding materializes powersets of " + std::to_string(P.size()) + " and " +
                          std::to_string(Q.size()) + " points; cap is " + std::to_string(cap));
    }
    std::vector<Subset> down_f(P.size());
    std::vector<Subset> down_g(Q.size());
    for (Element p = 0; p < P.size(); ++p) {
        down_f[p] = downset(Q, gc.f()(p));
    }
    for (Element q = 0; q < Q.size(); ++q) {
        down_g[q] = downset(P, gc.g()(q));
    }
    // Intersection over the empty family is the whole carrier.
    auto lift = [](const std::vector<Subset>& downs, std::size_t domain, std::size_t codomain) {
        std::vector<Element> table(std::size_t{1} << domain);
        for (std::size_t a = 0; a < table.size(); ++a) {
            Subset acc = full_subset(codomain);
            for_each_member(a, [&](std::size_t x) { acc &= downs[x]; });
            table[a] = acc;
        }
        return table;
    };
    GaloisConnection polarity{share(powerset_poset(P.size(), cap)), share(powerset_poset(Q.size(), cap)),
                              lift(down_f, P.size(), Q.size()), lift(down_g, Q.size(), P.size())};
    std::vector<Element> i_p(P.size());
    std::vector<Element> i_q(Q.size());
    for (Element p = 0; p < P.size(); ++p) {
        i_p[p] = downset(P, p);
    }
    for (Element q = 0; q < Q.size(); ++q) {
        i_q[q] = downset(Q, q);
    }
    GalMorphism morphism{gc, polarity, std::move(i_p), std::move(i_q)};
    return {std::move(polarity), std::move(morphism)};
}

Embedding embed_into_polarity(const GaloisConnection& gc) { return embed_into_polarity(gc, materialization_cap()); }

FormalContext embedding_relation(const GaloisConnection& gc) {
    const Poset& P = gc.P();
    const Poset& Q = gc.Q();
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    for (Element p = 0; p < P.size(); ++p) {
        objects.push_back(P.label(p));
    }
    for (Element q = 0; q < Q.size(); ++q) {
        attributes.push_back(Q.label(q));
    }
    FormalContext ctx(std::move(objects), std::move(attributes));
    for (Element p = 0; p < P.size(); ++p) {
        for (Element q = 0; q < Q.size(); ++q) {
            if (P.leq(p, gc.g()(q)) && Q.leq(q, gc.f()(p))) {
                ctx.set_incident(p, q);
            }
        }
    }
    return ctx;
}

InitialityReport check_initiality(const GalMorphism& m, std::span<const GaloisConnection> probes, double budget) {
    InitialityReport report;
    const auto& src = m.src();
    const auto& dst = m.dst();
    for (const auto& probe : probes) {
        const std::size_t np = probe.P().size();
        const std::size_t nq = probe.Q().size();
        const double pairs = std::pow(static_cast<double>(src.P().size()), static_cast<double>(np)) *
                             std::pow(static_cast<double>(src.Q().size()), static_cast<double>(nq));
        if (pairs > budget) {
            throw CapExceeded("initiality probe needs " + std::to_string(pairs) + " map pairs");
        }
        ++report.probes;
        if ((np > 0 && src.P().size() == 0) || (nq > 0 && src.Q().size() == 0)) {
            continue;
        }
        std::vector<Element> r(np, 0);
        std::vector<Element> s(nq, 0);
        std::vector<Element> hr(np);
        std::vector<Element> ks(nq);
        // Odometer over r then s.
        auto advance = [](std::vector<Element>& v, std::size_t base) {
            for (auto& d : v) {
                if (++d < base) {
                    return true;
                }
                d = 0;
            }
            return false;
        };
        do {
            do {
                ++report.checked;
                for (std::size_t i = 0; i < np; ++i) {
                    hr[i] = m.h()[r[i]];
                }
                for (std::size_t i = 0; i < nq; ++i) {
                    ks[i] = m.k()[s[i]];
                }
                if (!is_gal_morphism(probe, dst, hr, ks).holds) {
                    continue;
                }
                ++report.triggered;
                auto direct = is_gal_morphism(probe, src, r, s);
                if (!direct.holds) {
                    if (report.violations++ == 0) {
                        report.first_violation = direct.witness->detail;
                    }
                }
            } while (advance(s, src.Q().size()));
        } while (advance(r, src.P().size()));
    }
    return report;
}

OrderVerdict is_context_morphism(const FormalContext& src, const FormalContext& dst, std::span<const Element> h,
                                 std::span<const Element> k) {
    auto a = polarity_of(src).materialize();
    auto b = polarity_of(dst).materialize();
    if (!a || !b) {
        throw CapExceeded("context morphisms are checked on materialized polarities; a carrier exceeds the cap");
    }
    return is_gal_morphism(*a, *b, h, k);
}

} // namespace galcore
