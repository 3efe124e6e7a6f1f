#pragma once

#include "galcore/context.hpp"
#include "galcore/galois.hpp"
#include "galcore/ordering.hpp"

#include <span>
#include <vector>

namespace galcore {

/// Morphism (h, k) between Galois connections: k f1 = f2 h and h g1 = g2 k.
/// h and k are arbitrary set functions; no monotonicity is required.
class GalMorphism {
  public:
    /// Throws DimensionMismatch on malformed tables and InvalidMorphism when a square fails.
    GalMorphism(GaloisConnection src, GaloisConnection dst, std::vector<Element> h, std::vector<Element> k);

    [[nodiscard]] const GaloisConnection& src() const noexcept { return src_; }
    [[nodiscard]] const GaloisConnection& dst() const noexcept { return dst_; }
    [[nodiscard]] std::span<const Element> h() const noexcept { return h_; }
    [[nodiscard]] std::span<const Element> k() const noexcept { return k_; }

  private:
    GaloisConnection src_;
    GaloisConnection dst_;
    std::vector<Element> h_;
    std::vector<Element> k_;
};

/// Both commuting squares. Throws DimensionMismatch when the tables do not
/// fit the carriers.
OrderVerdict is_gal_morphism(const GaloisConnection& src, const GaloisConnection& dst, std::span<const Element> h,
                             std::span<const Element> k);

/// The equivalent readings of the morphism condition, each evaluated on its own.
struct MorphismCharacterization {
    /// Both squares commute.
    OrderVerdict commutes;
    /// h and k send fixed points to fixed points.
    OrderVerdict preserves_nodes;
    /// Elements sharing a leaf land in a common leaf.
    OrderVerdict preserves_levels;
    /// Anti-isomorphic leaves go to anti-isomorphic leaves.
    OrderVerdict preserves_leaf_pairs;
    /// Each leaf is sent by both paths to a single fixed point.
    OrderVerdict paths_agree;

    [[nodiscard]] bool structural() const noexcept {
        return preserves_nodes.holds && preserves_levels.holds && preserves_leaf_pairs.holds;
    }
    [[nodiscard]] bool consistent() const noexcept {
        return commutes.holds == structural() && commutes.holds == paths_agree.holds;
    }
};

MorphismCharacterization characterize_morphism(const GaloisConnection& src, const GaloisConnection& dst,
                                               std::span<const Element> h, std::span<const Element> k);

bool is_monomorphism(const GalMorphism& m) noexcept;

/// Both components order-preserving (the restriction to order-preserving morphisms).
bool is_order_preserving(const GalMorphism& m);

GalMorphism identity(const GaloisConnection& gc);
/// `second` after `first`; throws EndpointMismatch unless first.dst() == second.src().
GalMorphism compose(const GalMorphism& second, const GalMorphism& first);

struct Embedding {
    /// (F, P(P), P(Q), G) with F(A) = intersection of the down-sets of f(p), p in A.
    GaloisConnection polarity;
    /// (i_P, i_Q) with i(x) = down-set of x.
    GalMorphism morphism;
};

/// Throws CapExceeded when |P| or |Q| exceeds the materialization cap.
Embedding embed_into_polarity(const GaloisConnection& gc, std::size_t cap);
Embedding embed_into_polarity(const GaloisConnection& gc);

/// (p, q) in R iff p <= g(q) and q <= f(p); objects are P, attributes Q.
FormalContext embedding_relation(const GaloisConnection& gc);

struct InitialityReport {
    std::size_t probes = 0;
    /// Set-map pairs (r, s) examined.
    std::size_t checked = 0;
    /// Pairs whose composite with the morphism is a Gal-morphism.
    std::size_t triggered = 0;
    /// Triggered pairs that are not themselves Gal-morphisms.
    std::size_t violations = 0;
    std::string first_violation;

    [[nodiscard]] bool ok() const noexcept { return violations == 0; }
};

/// For every probe C and every pair of set maps (r, s) : U(C) -> U(src): if
/// (h r, k s) is a Gal-morphism C -> dst then (r, s) must be one C -> src.
/// Throws CapExceeded when a probe needs more than `budget` map pairs.
InitialityReport check_initiality(const GalMorphism& m, std::span<const GaloisConnection> probes,
                                  double budget = 1e7);

/// Map pair between contexts is a morphism of formal contexts iff it is one
/// between their materialized polarities; h and k act on subsets (bitmask indices).
OrderVerdict is_context_morphism(const FormalContext& src, const FormalContext& dst, std::span<const Element> h,
                                 std::span<const Element> k);

} // namespace galcore
