#pragma once

#include "galcore/galois.hpp"
#include "galcore/subset.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galcore {

/// Formal context (G, M, R) over at most 64 objects and 64 attributes.
///
/// The incidence is kept twice, as object rows and attribute columns, so that
/// both derivation operators are a fold of word-wide ANDs.
class FormalContext {
  public:
    FormalContext() = default;
    /// Empty relation with default labels g1..gn and m1..mk.
    FormalContext(std::size_t objects, std::size_t attributes);
    /// Empty relation with the given labels; throws on duplicates or more than 64 per side.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes, std::string name = {});

    [[nodiscard]] std::size_t object_count() const noexcept { return objects_.size(); }
    [[nodiscard]] std::size_t attribute_count() const noexcept { return attributes_.size(); }
    [[nodiscard]] Subset all_objects() const noexcept { return full_subset(object_count()); }
    [[nodiscard]] Subset all_attributes() const noexcept { return full_subset(attribute_count()); }

    [[nodiscard]] bool incident(Element g, Element m) const noexcept { return contains(rows_[g], m); }
    void set_incident(Element g, Element m, bool value = true);

    /// Attributes of object g / objects having attribute m.
    [[nodiscard]] Subset row(Element g) const noexcept { return rows_[g]; }
    [[nodiscard]] Subset column(Element m) const noexcept { return columns_[m]; }
    [[nodiscard]] std::size_t incidence_count() const noexcept;

    [[nodiscard]] const std::vector<std::string>& object_labels() const noexcept { return objects_; }
    [[nodiscard]] const std::vector<std::string>& attribute_labels() const noexcept { return attributes_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    [[nodiscard]] std::optional<Element> find_object(std::string_view label) const;
    [[nodiscard]] std::optional<Element> find_attribute(std::string_view label) const;

    /// Equal dimensions and incidence; labels and name do not take part.
    friend bool operator==(const FormalContext& a, const FormalContext& b) noexcept {
        return a.objects_.size() == b.objects_.size() && a.attributes_.size() == b.attributes_.size() &&
               a.rows_ == b.rows_;
    }

  private:
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<Subset> rows_;
    std::vector<Subset> columns_;
};

/// Common attributes of the objects in A; H(empty) = M.
Subset H(const FormalContext& ctx, Subset objects);
/// Common objects of the attributes in B; K(empty) = G.
Subset K(const FormalContext& ctx, Subset attributes);

/// K(H(A)) and H(K(B)).
Subset closure_GG(const FormalContext& ctx, Subset objects);
Subset closure_MM(const FormalContext& ctx, Subset attributes);

/// The Birkhoff polarity (H, P(G), P(M), K) of a context.
class Polarity {
  public:
    explicit Polarity(FormalContext ctx);

    [[nodiscard]] const FormalContext& context() const noexcept { return *ctx_; }
    [[nodiscard]] Subset H(Subset objects) const { return galcore::H(*ctx_, objects); }
    [[nodiscard]] Subset K(Subset attributes) const { return galcore::K(*ctx_, attributes); }

    [[nodiscard]] bool materializable(std::size_t cap) const noexcept;
    /// Galois connection over shared powerset posets; nullopt when a carrier exceeds `cap`.
    [[nodiscard]] std::optional<GaloisConnection> materialize(std::size_t cap) const;
    [[nodiscard]] std::optional<GaloisConnection> materialize() const;

  private:
    std::shared_ptr<const FormalContext> ctx_;
};

Polarity polarity_of(const FormalContext& ctx);

/// Inverse of `polarity_of`: (g, m) in R iff m in f({g}). Throws
/// NotPowersetLattice unless both posets are subset lattices under the
/// bitmask encoding.
FormalContext relation_of(const GaloisConnection& polarity);
FormalContext relation_of(const Polarity& polarity);

/// Burmeister .cxt reader and writer.
FormalContext parse_cxt(std::string_view text);
std::string write_cxt(const FormalContext& ctx);

/// Renders the cross table with labels, one row per object.
std::string format_context(const FormalContext& ctx);

} // namespace galcore
