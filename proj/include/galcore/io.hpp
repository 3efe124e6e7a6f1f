#pragma once

#include "galcore/concepts.hpp"
#include "galcore/galois.hpp"
#include "galcore/poset.hpp"

#include <json.hpp>

#include <string>

namespace galcore {

/// `{ "size": n, "leq": [[bool,...],...], "labels": [...] }`; labels optional.
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

/// `{ "P": <poset>, "Q": <poset>, "f": [indices], "g": [indices] }`.
nlohmann::json gc_to_json(const GaloisConnection& gc);
GaloisConnection gc_from_json(const nlohmann::json& j);

/// Parses text as JSON; syntax and schema errors surface as galcore::Error.
nlohmann::json parse_json(const std::string& text);

nlohmann::json lattice_to_json(const ConceptLattice& lattice, const FormalContext& ctx);

/// Covering pairs (lower, upper) of a finite poset, by index.
std::vector<std::pair<Element, Element>> covering_pairs(const Poset& p);

/// Hasse diagram of a concept lattice with reduced labelling: each object is
/// printed at its object concept and each attribute at its attribute concept.
std::string export_dot(const ConceptLattice& lattice, const FormalContext& ctx);

} // namespace galcore
