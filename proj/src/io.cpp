#include "galcore/io.hpp"

#include "galcore/error.hpp"

#include <sstream>

namespace galcore {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(std::string("field '") + key + "': " + e.what());
    }
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

} // namespace

json poset_to_json(const Poset& p) {
    json leq = json::array();
    for (Element x = 0; x < p.size(); ++x) {
        json row = json::array();
        for (Element y = 0; y < p.size(); ++y) {
            row.push_back(p.leq(x, y));
        }
        leq.push_back(std::move(row));
    }
    json out{{"size", p.size()}, {"leq", std::move(leq)}};
    if (!p.labels().empty()) {
        out["labels"] = p.labels();
    }
    return out;
}

Poset poset_from_json(const json& j) {
    const auto size = field<std::size_t>(j, "size");
    const auto leq = field<std::vector<std::vector<bool>>>(j, "leq");
    if (leq.size() != size) {
        throw DimensionMismatch("poset declares size " + std::to_string(size) + " but has " +
                                std::to_string(leq.size()) + " leq rows");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = field<std::vector<std::string>>(j, "labels");
    }
    return Poset::from_matrix(leq, std::move(labels));
}

json gc_to_json(const GaloisConnection& gc) {
    return {{"P", poset_to_json(gc.P())},
            {"Q", poset_to_json(gc.Q())},
            {"f", std::vector<Element>(gc.f().table().begin(), gc.f().table().end())},
            {"g", std::vector<Element>(gc.g().table().begin(), gc.g().table().end())}};
}

GaloisConnection gc_from_json(const json& j) {
    if (!j.is_object() || !j.contains("P") || !j.contains("Q")) {
        throw Error("Galois connection JSON needs fields P, Q, f, g");
    }
    auto p = share(poset_from_json(j.at("P")));
    auto q = share(poset_from_json(j.at("Q")));
    return GaloisConnection{std::move(p), std::move(q), field<std::vector<Element>>(j, "f"),
                            field<std::vector<Element>>(j, "g")};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
}

json lattice_to_json(const ConceptLattice& lattice, const FormalContext& ctx) {
    json concepts = json::array();
    for (const auto& c : lattice.concepts) {
        json extent = json::array();
        json intent = json::array();
        for_each_member(c.extent, [&](std::size_t g) { extent.push_back(ctx.object_labels()[g]); });
        for_each_member(c.intent, [&](std::size_t m) { intent.push_back(ctx.attribute_labels()[m]); });
        concepts.push_back({{"extent", std::move(extent)}, {"intent", std::move(intent)}});
    }
    json edges = json::array();
    for (auto [lo, hi] : covering_pairs(lattice.order)) {
        edges.push_back({lo, hi});
    }
    return {{"concepts", std::move(concepts)}, {"covers", std::move(edges)}};
}

std::vector<std::pair<Element, Element>> covering_pairs(const Poset& p) {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < p.size(); ++x) {
        for (Element y = 0; y < p.size(); ++y) {
            if (!p.lt(x, y)) {
                continue;
            }
            bool covered = true;
            for (Element z = 0; z < p.size() && covered; ++z) {
                if (p.lt(x, z) && p.lt(z, y)) {
                    covered = false;
                }
            }
            if (covered) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

std::string export_dot(const ConceptLattice& lattice, const FormalContext& ctx) {
    std::vector<std::vector<std::string>> own_objects(lattice.concepts.size());
    std::vector<std::vector<std::string>> own_attributes(lattice.concepts.size());
    for (Element g = 0; g < ctx.object_count(); ++g) {
        if (auto i = lattice.index_of_extent(closure_GG(ctx, singleton(g)))) {
            own_objects[*i].push_back(ctx.object_labels()[g]);
        }
    }
    for (Element m = 0; m < ctx.attribute_count(); ++m) {
        if (auto i = lattice.index_of_extent(K(ctx, singleton(m)))) {
            own_attributes[*i].push_back(ctx.attribute_labels()[m]);
        }
    }
    auto join_labels = [](const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out += (i ? "," : "") + v[i];
        }
        return out;
    };
    std::ostringstream out;
    out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.concepts.size(); ++i) {
        out << "  c" << i << " [label=\"" << dot_escape(join_labels(own_attributes[i])) << "\\n"
            << dot_escape(join_labels(own_objects[i])) << "\"];\n";
    }
    for (auto [lo, hi] : covering_pairs(lattice.order)) {
        out << "  c" << lo << " -> c" << hi << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace galcore
