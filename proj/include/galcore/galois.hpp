#pragma once

#include "galcore/poset.hpp"
#include "galcore/report.hpp"

#include <optional>
#include <vector>

namespace galcore {

enum class Side { P, Q };

/// Order-reversing Galois connection candidate (f, P, Q, g).
///
/// Construction only checks that both tables are total and in range; use
/// `validate_gc` or `validate_gc_adjoint` to decide whether the quadruple is
/// actually a Galois connection.
class GaloisConnection {
  public:
    GaloisConnection(PosetRef p, PosetRef q, std::vector<Element> f, std::vector<Element> g);

    [[nodiscard]] const Poset& P() const noexcept { return f_.dom(); }
    [[nodiscard]] const Poset& Q() const noexcept { return f_.cod(); }
    [[nodiscard]] const PosetRef& p_ref() const noexcept { return f_.dom_ref(); }
    [[nodiscard]] const PosetRef& q_ref() const noexcept { return f_.cod_ref(); }

    [[nodiscard]] const OrderMap& f() const noexcept { return f_; }
    [[nodiscard]] const OrderMap& g() const noexcept { return g_; }

    /// g(f(p)) and f(g(q)).
    [[nodiscard]] Element close_p(Element p) const noexcept { return g_(f_(p)); }
    [[nodiscard]] Element close_q(Element q) const noexcept { return f_(g_(q)); }

    friend bool operator==(const GaloisConnection& a, const GaloisConnection& b) noexcept {
        return a.f_ == b.f_ && a.g_ == b.g_;
    }

  private:
    OrderMap f_;
    OrderMap g_;
};

/// Both maps antitone, p <= gf(p) for every p, q <= fg(q) for every q.
ValidationReport validate_gc(const GaloisConnection& gc);

/// p <= g(q) iff q <= f(p), for every pair (p, q).
ValidationReport validate_gc_adjoint(const GaloisConnection& gc);

/// Fixed points {x : x = gf(x)} on P, or {y : y = fg(y)} on Q, ascending.
std::vector<Element> nodes(const GaloisConnection& gc, Side side);

/// Image of g (side P) or of f (side Q), ascending.
std::vector<Element> image(const GaloisConnection& gc, Side side);

/// Partition of one side into the fibers of its outgoing map.
struct LeafDecomposition {
    Side side = Side::P;
    /// Leaves in ascending order of their node.
    std::vector<std::vector<Element>> leaves;
    std::vector<Element> node_of_leaf;
    /// Element -> index into `leaves`.
    std::vector<std::size_t> leaf_of;
    /// E1 <= E2 iff some member of E1 is below some member of E2.
    Poset leaf_order;
};

LeafDecomposition leaves(const GaloisConnection& gc, Side side);

/// Leaf correspondence f* : L(P) -> L(Q) and its inverse g*, by leaf index.
struct LeafCorrespondence {
    std::vector<std::size_t> forward;
    std::vector<std::size_t> backward;
};

LeafCorrespondence leaf_antiiso(const GaloisConnection& gc);
LeafCorrespondence leaf_antiiso(const LeafDecomposition& p_leaves, const LeafDecomposition& q_leaves,
                                const GaloisConnection& gc);

struct AdjointResult {
    std::optional<GaloisConnection> connection;
    /// Elements of Q whose defining join does not exist.
    std::vector<Element> missing_joins;
    /// Set when every join exists but the resulting pair is not a connection.
    ValidationReport failure;
};

/// g(q) = join{p : q <= f(p)}. Succeeds iff `f` is the left part of some
/// Galois connection, which is then unique.
AdjointResult derive_adjoint(const OrderMap& f);

bool is_perfect(const GaloisConnection& gc);

/// fgf = f and gfg = g pointwise; witnesses name the failing element.
ValidationReport idempotence_check(const GaloisConnection& gc);

/// Whether the fixed points on `side`, ordered as in the ambient poset, form a
/// complete lattice (joins are computed inside the node set, not in P or Q).
bool node_lattice_complete(const GaloisConnection& gc, Side side);

} // namespace galcore
