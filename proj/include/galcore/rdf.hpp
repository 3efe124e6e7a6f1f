#pragma once

#include "galcore/context.hpp"
#include "galcore/ordering.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace galcore::rdf {

/// Terms keep their N-Triples spelling minus the angle brackets of IRIs;
/// literals keep their quotes and any language tag or datatype.
struct Triple {
    std::string subject;
    std::string predicate;
    std::string object;

    friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleSet {
    std::vector<Triple> triples;
    std::string source;
};

/// Line-oriented N-Triples subset: `<s> <p> <o> .` or `<s> <p> "literal" .`,
/// with blank-node subjects/objects (`_:x`), `#` comments and blank lines.
/// Duplicates are kept. Throws ParseError with the offending line number.
TripleSet parse_ntriples(std::string_view text, std::string source = {});

/// Subjects (sorted) x predicates (sorted); (s, p) incident iff some (s, p, o) exists.
FormalContext context_from_triples(const TripleSet& triples);

struct SchemaClass {
    Subset extent = 0;
    Subset intent = 0;
};

struct Schema {
    /// One class per concept, in lectic order of extents.
    std::vector<SchemaClass> classes;
    /// (i, j) with extent i a proper subset of extent j.
    std::vector<std::pair<std::size_t, std::size_t>> subclass_of;
};

Schema schema_classes(const FormalContext& ctx);

/// Copies of both contexts over the sorted union of their object and attribute labels.
std::pair<FormalContext, FormalContext> align_carriers(const FormalContext& a, const FormalContext& b);

struct SchemaDiff {
    /// Extents over the aligned object carrier.
    std::vector<Subset> added;
    std::vector<Subset> removed;
    std::vector<Subset> preserved;
    FormalContext old_context;
    FormalContext new_context;
    OrderVerdict relation_old_new;
    OrderVerdict relation_new_old;
    /// Set when the aligned polarities fit under the materialization cap.
    std::optional<OrderVerdict> preceq_p;
    std::optional<OrderVerdict> preceq_q;
    std::optional<OrderVerdict> preceq_pq;
    std::size_t old_node_count = 0;
    std::size_t new_node_count = 0;

    [[nodiscard]] bool empty() const noexcept { return added.empty() && removed.empty(); }
};

SchemaDiff schema_diff(const FormalContext& old_ctx, const FormalContext& new_ctx);

std::string format_schema(const Schema& schema, const FormalContext& ctx);
std::string format_diff(const SchemaDiff& diff);

} // namespace galcore::rdf
