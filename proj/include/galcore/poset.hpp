#pragma once

#include "galcore/report.hpp"
#include "galcore/subset.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace galcore {

/// Finite relation on {0..size-1} intended to be a partial order.
///
/// The relation is stored as a row-major bit matrix. Construction does not
/// enforce the order axioms so that `validate_poset` can report on arbitrary
/// input; every factory in this header produces a valid order.
class Poset {
  public:
    Poset() = default;

    template <class Pred>
    static Poset from_predicate(std::size_t size, Pred&& leq, std::vector<std::string> labels = {}) {
        Poset p{size, std::move(labels)};
        for (std::size_t x = 0; x < size; ++x) {
            for (std::size_t y = 0; y < size; ++y) {
                if (leq(x, y)) {
                    p.set(x, y);
                }
            }
        }
        return p;
    }

    /// Builds from a dense boolean table; throws DimensionMismatch if not square.
    static Poset from_matrix(const std::vector<std::vector<bool>>& leq, std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    [[nodiscard]] bool leq(Element x, Element y) const noexcept {
        return ((bits_[x * words_ + (y >> 6)] >> (y & 63)) & 1U) != 0;
    }
    [[nodiscard]] bool lt(Element x, Element y) const noexcept { return x != y && leq(x, y); }

    /// Display name; falls back to the decimal index.
    [[nodiscard]] std::string label(Element x) const;
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] std::optional<Element> find_label(const std::string& name) const;

    /// Equality of the order structure; labels are display data and are ignored.
    friend bool operator==(const Poset& a, const Poset& b) noexcept {
        return a.size_ == b.size_ && a.bits_ == b.bits_;
    }

  private:
    Poset(std::size_t size, std::vector<std::string> labels);
    void set(Element x, Element y) noexcept { bits_[x * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63); }

    std::size_t size_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
};

using PosetRef = std::shared_ptr<const Poset>;

inline PosetRef share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

/// Structural equality that short-circuits on shared instances.
bool same_poset(const PosetRef& a, const PosetRef& b) noexcept;

/// Total function between two posets, stored as a dense table.
class OrderMap {
  public:
    /// Throws DimensionMismatch unless the table is total and in range.
    OrderMap(PosetRef dom, PosetRef cod, std::vector<Element> table);

    [[nodiscard]] const Poset& dom() const noexcept { return *dom_; }
    [[nodiscard]] const Poset& cod() const noexcept { return *cod_; }
    [[nodiscard]] const PosetRef& dom_ref() const noexcept { return dom_; }
    [[nodiscard]] const PosetRef& cod_ref() const noexcept { return cod_; }

    [[nodiscard]] Element operator()(Element x) const noexcept { return table_[x]; }
    [[nodiscard]] std::span<const Element> table() const noexcept { return table_; }
    [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }

    /// Same domain and codomain structure and the same table.
    friend bool operator==(const OrderMap& a, const OrderMap& b) noexcept {
        return a.table_ == b.table_ && same_poset(a.dom_, b.dom_) && same_poset(a.cod_, b.cod_);
    }

  private:
    PosetRef dom_;
    PosetRef cod_;
    std::vector<Element> table_;
};

struct Extremes {
    std::optional<Element> top;
    std::optional<Element> bottom;
};

/// Lists every reflexivity, antisymmetry and transitivity failure with its witness.
ValidationReport validate_poset(const Poset& p);

bool is_antitone(const OrderMap& m);
bool is_monotone(const OrderMap& m);

/// { y : y <= x }. Requires p.size() <= 64 (CapExceeded) and x < p.size() (std::out_of_range).
Subset downset(const Poset& p, Element x);
Subset upset(const Poset& p, Element x);

/// Least upper bound of `s`, if one exists. join of the empty set is the bottom element.
std::optional<Element> join(const Poset& p, std::span<const Element> s);
/// Greatest lower bound of `s`, if one exists. meet of the empty set is the top element.
std::optional<Element> meet(const Poset& p, std::span<const Element> s);

Extremes top_bottom(const Poset& p);

/// Every pair has a join and a meet and the poset is non-empty. For finite
/// posets this is equivalent to every subset having a join and a meet.
bool is_complete_lattice(const Poset& p);

/// Sub-poset on `elements` (in the given order) with the inherited relation.
Poset induced(const Poset& p, std::span<const Element> elements);

Poset chain(std::size_t n);
Poset antichain(std::size_t n);
/// {bottom, a, b, top} with a and b incomparable; labelled "bot", "a", "b", "top".
Poset diamond();

/// Subset lattice of an n-element set: element i is the bitmask i and
/// i <= j iff i & j == i. Throws CapExceeded when n exceeds `cap`.
Poset powerset_poset(std::size_t n, std::size_t cap);
Poset powerset_poset(std::size_t n);
/// Process-wide shared instance of `powerset_poset(n)`.
PosetRef shared_powerset(std::size_t n);

/// True iff p has 2^k elements ordered exactly as the subset lattice of k
/// points under the bitmask encoding; returns k.
std::optional<std::size_t> powerset_rank(const Poset& p);

/// Materialization cap for powerset lattices: GALCORE_CAP if set and valid, else 12.
std::size_t materialization_cap();

} // namespace galcore
