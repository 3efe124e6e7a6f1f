#include "galcore/rdf.hpp"

#include "galcore/concepts.hpp"
#include "galcore/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace galcore::rdf {

namespace {

class TermScanner {
  public:
    TermScanner(std::string_view line, std::size_t number) : line_{line}, number_{number} {}

    void skip_space() {
        while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) {
            ++pos_;
        }
    }

    [[nodiscard]] bool at_end() {
        skip_space();
        return pos_ >= line_.size();
    }

    std::string iri() {
        skip_space();
        if (pos_ >= line_.size() || line_[pos_] != '<') {
            fail("expected an IRI in angle brackets");
        }
        const auto close = line_.find('>', pos_ + 1);
        if (close == std::string_view::npos) {
            fail("unterminated IRI");
        }
        std::string out{line_.substr(pos_ + 1, close - pos_ - 1)};
        if (out.empty()) {
            fail("empty IRI");
        }
        if (out.find_first_of(" \t\"") != std::string::npos) {
            fail("illegal character in IRI");
        }
        pos_ = close + 1;
        return out;
    }

    std::string blank_node() {
        const auto start = pos_;
        pos_ += 2;
        while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t') {
            ++pos_;
        }
        if (pos_ == start + 2) {
            fail("empty blank node label");
        }
        return std::string{line_.substr(start, pos_ - start)};
    }

    std::string subject() {
        skip_space();
        if (line_.substr(pos_, 2) == "_:") {
            return blank_node();
        }
        return iri();
    }

    std::string object() {
        skip_space();
        if (pos_ >= line_.size()) {
            fail("missing object");
        }
        if (line_[pos_] == '<') {
            return iri();
        }
        if (line_.substr(pos_, 2) == "_:") {
            return blank_node();
        }
        if (line_[pos_] != '"') {
            fail("expected an IRI, blank node or literal as object");
        }
        const auto start = pos_;
        ++pos_;
        while (pos_ < line_.size() && line_[pos_] != '"') {
            pos_ += line_[pos_] == '\\' ? 2 : 1;
        }
        if (pos_ >= line_.size()) {
            fail("unterminated literal");
        }
        ++pos_;
        if (pos_ < line_.size() && line_[pos_] == '@') {
            ++pos_;
            while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '-')) {
                ++pos_;
            }
        } else if (line_.substr(pos_, 2) == "^^") {
            pos_ += 2;
            iri();
        }
        return std::string{line_.substr(start, pos_ - start)};
    }

    void terminator() {
        skip_space();
        if (pos_ >= line_.size() || line_[pos_] != '.') {
            fail("missing terminating '.'");
        }
        ++pos_;
        skip_space();
        if (pos_ < line_.size() && line_[pos_] != '#') {
            fail("unexpected text after '.'");
        }
    }

  private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(number_, message); }

    std::string_view line_;
    std::size_t number_;
    std::size_t pos_ = 0;
};

std::vector<std::string> sorted_union(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::set<std::string> all(a.begin(), a.end());
    all.insert(b.begin(), b.end());
    return {all.begin(), all.end()};
}

FormalContext realign(const FormalContext& ctx, const std::vector<std::string>& objects,
                      const std::vector<std::string>& attributes) {
    FormalContext out(objects, attributes, ctx.name());
    for (Element g = 0; g < ctx.object_count(); ++g) {
        const Element ng = *out.find_object(ctx.object_labels()[g]);
        for (Element m = 0; m < ctx.attribute_count(); ++m) {
            if (ctx.incident(g, m)) {
                out.set_incident(ng, *out.find_attribute(ctx.attribute_labels()[m]));
            }
        }
    }
    return out;
}

} // namespace

TripleSet parse_ntriples(std::string_view text, std::string source) {
    TripleSet out;
    out.source = std::move(source);
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        TermScanner scan{line, number};
        if (scan.at_end()) {
            continue;
        }
        const auto first = line.find_first_not_of(" \t");
        if (line[first] == '#') {
            continue;
        }
        Triple t;
        t.subject = scan.subject();
        t.predicate = scan.iri();
        t.object = scan.object();
        scan.terminator();
        out.triples.push_back(std::move(t));
    }
    return out;
}

FormalContext context_from_triples(const TripleSet& triples) {
    std::set<std::string> subjects;
    std::set<std::string> predicates;
    for (const auto& t : triples.triples) {
        subjects.insert(t.subject);
        predicates.insert(t.predicate);
    }
    FormalContext ctx({subjects.begin(), subjects.end()}, {predicates.begin(), predicates.end()}, triples.source);
    for (const auto& t : triples.triples) {
        ctx.set_incident(*ctx.find_object(t.subject), *ctx.find_attribute(t.predicate));
    }
    return ctx;
}

Schema schema_classes(const FormalContext& ctx) {
    Schema schema;
    for (const auto& c : enumerate_concepts(ctx).concepts) {
        schema.classes.push_back({c.extent, c.intent});
    }
    for (std::size_t i = 0; i < schema.classes.size(); ++i) {
        for (std::size_t j = 0; j < schema.classes.size(); ++j) {
            const Subset a = schema.classes[i].extent;
            const Subset b = schema.classes[j].extent;
            if (a != b && is_subset(a, b)) {
                schema.subclass_of.emplace_back(i, j);
            }
        }
    }
    return schema;
}

std::pair<FormalContext, FormalContext> align_carriers(const FormalContext& a, const FormalContext& b) {
    const auto objects = sorted_union(a.object_labels(), b.object_labels());
    const auto attributes = sorted_union(a.attribute_labels(), b.attribute_labels());
    return {realign(a, objects, attributes), realign(b, objects, attributes)};
}

SchemaDiff schema_diff(const FormalContext& old_ctx, const FormalContext& new_ctx) {
    auto [a, b] = align_carriers(old_ctx, new_ctx);
    SchemaDiff diff;
    diff.old_context = a;
    diff.new_context = b;
    const auto old_extents = closed_extents(a);
    const auto new_extents = closed_extents(b);
    std::set_difference(new_extents.begin(), new_extents.end(), old_extents.begin(), old_extents.end(),
                        std::back_inserter(diff.added));
    std::set_difference(old_extents.begin(), old_extents.end(), new_extents.begin(), new_extents.end(),
                        std::back_inserter(diff.removed));
    std::set_intersection(old_extents.begin(), old_extents.end(), new_extents.begin(), new_extents.end(),
                          std::back_inserter(diff.preserved));
    diff.relation_old_new = le_relation(a, b);
    diff.relation_new_old = le_relation(b, a);
    diff.old_node_count = old_extents.size();
    diff.new_node_count = new_extents.size();
    const auto pa = polarity_of(a).materialize();
    const auto pb = polarity_of(b).materialize();
    if (pa && pb) {
        diff.preceq_p = preceq_P(*pa, *pb);
        diff.preceq_q = preceq_Q(*pa, *pb);
        diff.preceq_pq = preceq_PQ(*pa, *pb);
    }
    return diff;
}

std::string format_schema(const Schema& schema, const FormalContext& ctx) {
    std::ostringstream out;
    for (std::size_t i = 0; i < schema.classes.size(); ++i) {
        const auto& c = schema.classes[i];
        out << "class " << i << ": " << format_subset(c.extent, ctx.object_labels()) << " | "
            << format_subset(c.intent, ctx.attribute_labels()) << '\n';
    }
    for (auto [i, j] : schema.subclass_of) {
        out << "subclass " << i << " < " << j << '\n';
    }
    return out.str();
}

std::string format_diff(const SchemaDiff& diff) {
    const auto& labels = diff.new_context.object_labels();
    std::ostringstream out;
    auto list = [&](const char* tag, const std::vector<Subset>& extents) {
        for (Subset e : extents) {
            out << tag << ' ' << format_subset(e, labels) << '\n';
        }
    };
    list("added", diff.added);
    list("removed", diff.removed);
    list("preserved", diff.preserved);
    auto verdict = [&](const char* name, const OrderVerdict& v) {
        out << name << ": " << (v.holds ? "holds" : "fails");
        if (v.witness) {
            out << " (" << v.witness->detail << ")";
        }
        out << '\n';
    };
    verdict("relation old<=new", diff.relation_old_new);
    verdict("relation new<=old", diff.relation_new_old);
    if (diff.preceq_p) {
        verdict("preceq_P old,new", *diff.preceq_p);
        verdict("preceq_Q old,new", *diff.preceq_q);
        verdict("preceq_PQ old,new", *diff.preceq_pq);
    } else {
        out << "nodes old=" << diff.old_node_count << " new=" << diff.new_node_count << '\n';
    }
    return out.str();
}

} // namespace galcore::rdf
