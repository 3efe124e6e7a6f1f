#pragma once

#include "galcore/context.hpp"
#include "galcore/galois.hpp"
#include "galcore/poset.hpp"

#include <string>

namespace fixtures {

using namespace galcore;

inline std::string data_path(const std::string& name) { return std::string{GALCORE_DATA_DIR} + "/" + name; }

/// G={g1,g2,g3}, M={m1,m2,m3}, R={(g1,m1),(g1,m2),(g2,m2),(g3,m3)}.
inline FormalContext k1() {
    FormalContext ctx{{"g1", "g2", "g3"}, {"m1", "m2", "m3"}, "K1"};
    ctx.set_incident(0, 0);
    ctx.set_incident(0, 1);
    ctx.set_incident(1, 1);
    ctx.set_incident(2, 2);
    return ctx;
}

inline PosetRef labelled_chain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return share(Poset::from_predicate(n, [](Element x, Element y) { return x <= y; }, labels));
}

/// Two connections between the chains 1<2<3 and 1<2<3<4 (index = value - 1).
/// The first is below the second on P but not on Q.
struct Chains {
    PosetRef p = labelled_chain(3);
    PosetRef q = labelled_chain(4);
    // f1: 1->4, 2->2, 3->2   g1: 1->3, 2->3, 3->1, 4->1
    GaloisConnection first{p, q, {3, 1, 1}, {2, 2, 0, 0}};
    // f2: 1->4, 2->3, 3->1   g2: 1->3, 2->2, 3->2, 4->1
    GaloisConnection second{p, q, {3, 2, 0}, {2, 1, 1, 0}};
};

/// Two perfect connections on the diamond {bot,a,b,top}: both swap bot and
/// top; the first fixes a and b, the second swaps them.
struct Diamonds {
    PosetRef d = share(diamond());
    GaloisConnection fixing{d, d, {3, 1, 2, 0}, {3, 1, 2, 0}};
    GaloisConnection swapping{d, d, {3, 2, 1, 0}, {3, 2, 1, 0}};
};

} // namespace fixtures
