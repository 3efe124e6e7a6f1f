#pragma once

#include "galcore/context.hpp"
#include "galcore/galois.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galcore {

struct Witness {
    Side side = Side::P;
    Element element = 0;
    std::string detail;
};

/// Outcome of an order comparison. `witness` is set exactly when `holds` is false.
struct OrderVerdict {
    bool holds = true;
    std::optional<Witness> witness;
    /// Which characterization produced the verdict.
    std::string_view via;

    explicit operator bool() const noexcept { return holds; }
};

/// Throws CarrierMismatch unless both connections share P and Q (as orders).
void require_shared_carriers(const GaloisConnection& a, const GaloisConnection& b);

// Pointwise order: f1(p) <= f2(p) for every p.
OrderVerdict le_pointwise(const GaloisConnection& a, const GaloisConnection& b);
/// The same order read off the second maps: g1(q) <= g2(q) for every q.
OrderVerdict le_pointwise_via_g(const GaloisConnection& a, const GaloisConnection& b);

/// R1 within R2 for contexts on the same carriers.
OrderVerdict le_relation(const FormalContext& a, const FormalContext& b);

struct ExtremalConnections {
    std::optional<GaloisConnection> greatest;
    std::optional<GaloisConnection> least;
};

/// Constant-to-top connection (needs both tops) and the least connection
/// sending everything but bottom to bottom (needs tops and bottoms).
ExtremalConnections extremal_gcs(const PosetRef& p, const PosetRef& q);

/// g2f2(p) <= g1f1(p) for every p.
OrderVerdict preceq_P(const GaloisConnection& a, const GaloisConnection& b);
/// Fixed points of a on P are fixed points of b.
OrderVerdict preceq_P_by_nodes(const GaloisConnection& a, const GaloisConnection& b);
/// Every leaf of b on P lies inside a leaf of a.
OrderVerdict preceq_P_by_refinement(const GaloisConnection& a, const GaloisConnection& b);

/// f2g2(q) <= f1g1(q) for every q.
OrderVerdict preceq_Q(const GaloisConnection& a, const GaloisConnection& b);
OrderVerdict preceq_Q_by_nodes(const GaloisConnection& a, const GaloisConnection& b);
OrderVerdict preceq_Q_by_refinement(const GaloisConnection& a, const GaloisConnection& b);

OrderVerdict preceq_PQ(const GaloisConnection& a, const GaloisConnection& b);
bool preceq_PQ_equiv(const GaloisConnection& a, const GaloisConnection& b);

/// Node inclusion on both sides.
OrderVerdict sq_nodes(const GaloisConnection& a, const GaloisConnection& b);

/// Sufficient condition for maximality in the P pre-order: gf is the identity on P.
bool closure_is_identity(const GaloisConnection& gc);

/// Identity pair on the underlying sets is a Gal-morphism from a to b. The
/// two connections need the same carrier sizes but may order them differently.
OrderVerdict fiber_leq(const GaloisConnection& a, const GaloisConnection& b);

/// Every Galois connection between p and q, ascending lexicographically by f
/// table. Antitone f tables are generated by backtracking and completed with
/// `derive_adjoint`. Throws CapExceeded when |Q|^|P| exceeds `budget`.
std::vector<GaloisConnection> enumerate_gcs(const PosetRef& p, const PosetRef& q, double budget = 1e7);

std::string_view side_name(Side side) noexcept;

} // namespace galcore
