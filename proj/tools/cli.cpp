#include "cli.hpp"

#include "galcore/category.hpp"
#include "galcore/concepts.hpp"
#include "galcore/context.hpp"
#include "galcore/error.hpp"
#include "galcore/io.hpp"
#include "galcore/oracle.hpp"
#include "galcore/ordering.hpp"
#include "galcore/rdf.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace galcore::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) {
        throw Error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file{path, std::ios::binary};
    if (!file) {
        throw Error("cannot write " + path);
    }
    file << text;
}

std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> parts;
    if (text.empty()) {
        return parts;
    }
    std::string cur;
    std::istringstream in{text};
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    return parts;
}

FormalContext load_context(const std::string& path) {
    auto ctx = parse_cxt(read_file(path));
    if (ctx.name().empty()) {
        ctx.set_name(path);
    }
    return ctx;
}

GaloisConnection load_gc(const std::string& path) { return gc_from_json(parse_json(read_file(path))); }

Subset parse_labels(const std::string& text, const std::vector<std::string>& labels, const char* what) {
    Subset s = 0;
    for (const auto& name : split(text)) {
        const auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) {
            throw Error(std::string("unknown ") + what + " '" + name + "'");
        }
        s |= singleton(static_cast<std::size_t>(it - labels.begin()));
    }
    return s;
}

// Indices or labels of `target`, comma separated.
std::vector<Element> parse_table(const std::string& text, const Poset& target, const char* what) {
    std::vector<Element> table;
    for (const auto& item : split(text)) {
        if (const auto found = target.find_label(item)) {
            table.push_back(*found);
            continue;
        }
        std::size_t pos = 0;
        Element value = 0;
        try {
            value = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size()) {
            throw Error(std::string("bad entry '") + item + "' in " + what);
        }
        table.push_back(value);
    }
    return table;
}

std::string concept_line(const Concept& c, const FormalContext& ctx) {
    return format_subset(c.extent, ctx.object_labels()) + "  " + format_subset(c.intent, ctx.attribute_labels());
}

std::string verdict_line(std::string_view name, const OrderVerdict& v) {
    std::string s{name};
    s += ": ";
    s += v.holds ? "holds" : "fails";
    if (!v.via.empty()) {
        s += " [";
        s += v.via;
        s += "]";
    }
    if (v.witness) {
        s += " at ";
        s += side_name(v.witness->side);
        s += " element " + std::to_string(v.witness->element);
        if (!v.witness->detail.empty()) {
            s += ": " + v.witness->detail;
        }
    }
    return s + "\n";
}

std::string format_elements(std::span<const Element> xs, const Poset& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i == 0 ? "" : ",") + p.label(xs[i]);
    }
    return s + "}";
}

OrderVerdict compare_gcs(const std::string& kind, const GaloisConnection& a, const GaloisConnection& b) {
    if (kind == "pointwise") {
        return le_pointwise(a, b);
    }
    if (kind == "p") {
        return preceq_P(a, b);
    }
    if (kind == "q") {
        return preceq_Q(a, b);
    }
    if (kind == "pq") {
        return preceq_PQ(a, b);
    }
    if (kind == "nodes") {
        return sq_nodes(a, b);
    }
    return fiber_leq(a, b);
}

GaloisConnection materialized(const FormalContext& ctx) {
    auto gc = polarity_of(ctx).materialize();
    if (!gc) {
        throw CapExceeded("context " + ctx.name() + " exceeds the materialization cap " +
                          std::to_string(materialization_cap()));
    }
    return *gc;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Formal concept analysis and Galois connection toolkit", "galcore"};
    app.require_subcommand(1);

    std::size_t cap = 0;
    bool verbose = false;
    app.add_option("--cap", cap, "Materialization cap for powerset lattices (overrides GALCORE_CAP)")
        ->check(CLI::Range(1, 14));
    app.add_flag("-v,--verbose", verbose, "Report timing on the diagnostic stream");

    // ctx
    auto* ctx_cmd = app.add_subcommand("ctx", "Burmeister context files");
    ctx_cmd->require_subcommand(1);
    std::string ctx_path;
    std::string ctx_out;
    auto* ctx_validate = ctx_cmd->add_subcommand("validate", "Parse and report dimensions");
    ctx_validate->add_option("file", ctx_path)->required()->check(CLI::ExistingFile);
    auto* ctx_show = ctx_cmd->add_subcommand("show", "Print the cross table");
    ctx_show->add_option("file", ctx_path)->required()->check(CLI::ExistingFile);
    auto* ctx_roundtrip = ctx_cmd->add_subcommand("roundtrip", "Parse and write back in canonical form");
    ctx_roundtrip->add_option("file", ctx_path)->required()->check(CLI::ExistingFile);
    ctx_roundtrip->add_option("-o,--out", ctx_out, "Output path (default stdout)");

    // concepts
    auto* concepts_cmd = app.add_subcommand("concepts", "Enumerate the concept lattice");
    std::string concepts_path;
    std::string dot_path;
    bool concepts_json = false;
    concepts_cmd->add_option("file", concepts_path)->required()->check(CLI::ExistingFile);
    concepts_cmd->add_option("--dot", dot_path, "Write the Hasse diagram as DOT ('-' for stdout)");
    concepts_cmd->add_flag("--json", concepts_json, "JSON output");

    // preconcept
    auto* pre_cmd = app.add_subcommand("preconcept", "Inspect a preconcept");
    std::string pre_path;
    std::string pre_extent;
    std::string pre_intent;
    pre_cmd->add_option("file", pre_path)->required()->check(CLI::ExistingFile);
    pre_cmd->add_option("--extent", pre_extent, "Object labels, comma separated");
    pre_cmd->add_option("--intent", pre_intent, "Attribute labels, comma separated");
    auto* pre_mode = pre_cmd->add_option_group("mode");
    bool pre_members = false;
    bool pre_interval = false;
    bool pre_proto = false;
    pre_mode->add_flag("--members", pre_members, "List Precon(C,D)");
    pre_mode->add_flag("--interval", pre_interval, "Smallest and largest concept above");
    pre_mode->add_flag("--proto", pre_proto, "Protoconcept test");
    pre_mode->require_option(0, 1);

    // gm
    auto* gm_cmd = app.add_subcommand("gm", "Quotient of preconcepts by equivalence");
    std::string gm_path;
    bool gm_json = false;
    bool gm_exhaustive = false;
    gm_cmd->add_option("file", gm_path)->required()->check(CLI::ExistingFile);
    gm_cmd->add_flag("--json", gm_json, "JSON output");
    gm_cmd->add_flag("--exhaustive", gm_exhaustive, "Also list the member subsets of each leaf (small contexts)");

    // order
    auto* order_cmd = app.add_subcommand("order", "Compare two contexts or two connections");
    std::string ord_a;
    std::string ord_b;
    std::string ord_gc_a;
    std::string ord_gc_b;
    std::string ord_kind;
    order_cmd->add_option("--a", ord_a, "First context (.cxt)")->check(CLI::ExistingFile);
    order_cmd->add_option("--b", ord_b, "Second context (.cxt)")->check(CLI::ExistingFile);
    order_cmd->add_option("--gc-a", ord_gc_a, "First connection (JSON)")->check(CLI::ExistingFile);
    order_cmd->add_option("--gc-b", ord_gc_b, "Second connection (JSON)")->check(CLI::ExistingFile);
    order_cmd->add_option("--kind", ord_kind, "relation|pointwise|p|q|pq|nodes|fiber")
        ->check(CLI::IsMember({"relation", "pointwise", "p", "q", "pq", "nodes", "fiber"}));

    // galcheck
    auto* gal_cmd = app.add_subcommand("galcheck", "Validate a Galois connection and print its structure");
    std::string gal_path;
    gal_cmd->add_option("--gc", gal_path, "Connection (JSON)")->required()->check(CLI::ExistingFile);

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "Embed a connection into a polarity");
    std::string embed_path;
    std::string embed_out;
    std::string embed_relation;
    embed_cmd->add_option("--gc", embed_path, "Connection (JSON)")->required()->check(CLI::ExistingFile);
    embed_cmd->add_option("-o,--out", embed_out, "Polarity and morphism as JSON (default stdout)");
    embed_cmd->add_option("--relation", embed_relation, "Also write the embedding relation as .cxt ('-' for stdout)");

    // morphism
    auto* morph_cmd = app.add_subcommand("morphism", "Check a map pair between two connections");
    morph_cmd->set_help_flag("--help", "Print this help message and exit");
    std::string morph_src;
    std::string morph_dst;
    std::string morph_h;
    std::string morph_k;
    morph_cmd->add_option("--src", morph_src, "Source connection (JSON)")->required()->check(CLI::ExistingFile);
    morph_cmd->add_option("--dst", morph_dst, "Target connection (JSON)")->required()->check(CLI::ExistingFile);
    morph_cmd->add_option("--h", morph_h, "Map on P, comma separated indices or labels")->required();
    morph_cmd->add_option("--k", morph_k, "Map on Q, comma separated indices or labels")->required();

    // rdf
    auto* rdf_cmd = app.add_subcommand("rdf", "N-Triples ingestion");
    rdf_cmd->require_subcommand(1);
    std::string rdf_path;
    std::string rdf_new;
    std::string rdf_out;
    bool rdf_json = false;
    auto* rdf_ingest = rdf_cmd->add_subcommand("ingest", "Subject x predicate context as .cxt");
    rdf_ingest->add_option("file", rdf_path)->required()->check(CLI::ExistingFile);
    rdf_ingest->add_option("-o,--out", rdf_out, "Output path (default stdout)");
    auto* rdf_schema = rdf_cmd->add_subcommand("schema", "Classes and subclass pairs of a .cxt or .nt file");
    rdf_schema->add_option("file", rdf_path)->required()->check(CLI::ExistingFile);
    rdf_schema->add_option("--dot", rdf_out, "Write the class lattice as DOT ('-' for stdout)");
    auto* rdf_diff = rdf_cmd->add_subcommand("diff", "Compare the schemas of two graphs");
    rdf_diff->add_option("old", rdf_path)->required()->check(CLI::ExistingFile);
    rdf_diff->add_option("new", rdf_new)->required()->check(CLI::ExistingFile);
    rdf_diff->add_flag("--json", rdf_json, "JSON output");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Run the exhaustive certification sweeps");
    std::string sweep_sel = "all";
    std::string dims = "3x3";
    oracle::SweepSpec spec;
    bool oracle_json = false;
    oracle_cmd->add_option("--sweep", sweep_sel, "'all' or comma separated proposition names");
    oracle_cmd->add_option("--max", dims, "Context dimensions GxM (at most 3x3)");
    oracle_cmd->add_option("--poset-max", spec.max_poset_size, "Largest poset size (at most 4)");
    oracle_cmd->add_option("--seed", spec.seed, "Seed for sampled sweeps");
    oracle_cmd->add_option("--samples", spec.samples, "Sampled map pairs on 3-element posets");
    oracle_cmd->add_option("--random-contexts", spec.random_contexts, "Random 4x4 contexts for the Precon sweep");
    oracle_cmd->add_flag("--json", oracle_json, "JSON certification report");
    oracle_cmd->add_flag("--list", "List proposition names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (cap != 0) {
        ::setenv("GALCORE_CAP", std::to_string(cap).c_str(), 1);
    }
    const auto start = std::chrono::steady_clock::now();

    try {
        int code = 0;
        if (ctx_validate->parsed()) {
            const auto ctx = load_context(ctx_path);
            out << "valid: " << ctx.object_count() << " objects, " << ctx.attribute_count() << " attributes, "
                << ctx.incidence_count() << " incidences\n";
        } else if (ctx_show->parsed()) {
            out << format_context(load_context(ctx_path));
        } else if (ctx_roundtrip->parsed()) {
            write_output(ctx_out, write_cxt(load_context(ctx_path)), out);
        } else if (concepts_cmd->parsed()) {
            const auto ctx = load_context(concepts_path);
            const auto lattice = enumerate_concepts(ctx);
            if (concepts_json) {
                out << lattice_to_json(lattice, ctx).dump(2) << "\n";
            } else if (dot_path != "-") {
                for (std::size_t i = 0; i < lattice.concepts.size(); ++i) {
                    out << "c" << i << "  " << concept_line(lattice.concepts[i], ctx) << "\n";
                }
            }
            if (!dot_path.empty()) {
                write_output(dot_path, export_dot(lattice, ctx), out);
            }
        } else if (pre_cmd->parsed()) {
            const auto ctx = load_context(pre_path);
            const Preconcept pc{parse_labels(pre_extent, ctx.object_labels(), "object"),
                                parse_labels(pre_intent, ctx.attribute_labels(), "attribute")};
            if (!is_preconcept(ctx, pc)) {
                throw NotPreconcept("(" + format_subset(pc.objects, ctx.object_labels()) + ", " +
                                    format_subset(pc.attributes, ctx.attribute_labels()) +
                                    ") is not a preconcept: intent is not within H(extent) = " +
                                    format_subset(H(ctx, pc.objects), ctx.attribute_labels()));
            }
            if (pre_members) {
                for (const auto& c : precon_members(ctx, pc)) {
                    out << concept_line(c, ctx) << "\n";
                }
            } else if (pre_interval) {
                const auto iv = precon_interval(ctx, pc);
                out << "bottom  " << concept_line(iv.bottom, ctx) << "\n";
                out << "top     " << concept_line(iv.top, ctx) << "\n";
            } else if (pre_proto) {
                out << (is_protoconcept(ctx, pc) ? "protoconcept" : "not a protoconcept") << "\n";
            } else {
                const auto iv = precon_interval(ctx, pc);
                out << "preconcept: yes\n";
                out << "concept: " << (is_concept(ctx, pc.objects, pc.attributes) ? "yes" : "no") << "\n";
                out << "protoconcept: " << (is_protoconcept(ctx, pc) ? "yes" : "no") << "\n";
                out << "precon size: " << precon_members(ctx, pc).size() << "\n";
                out << "bottom  " << concept_line(iv.bottom, ctx) << "\n";
                out << "top     " << concept_line(iv.top, ctx) << "\n";
            }
        } else if (gm_cmd->parsed()) {
            const auto ctx = load_context(gm_path);
            const auto q = gm_quotient(ctx);
            if (gm_json) {
                nlohmann::json elems = nlohmann::json::array();
                for (const auto& e : q.elements) {
                    elems.push_back({{"extent_node", members(e.extent_node)}, {"intent_node", members(e.intent_node)}});
                }
                out << nlohmann::json{{"elements", elems}, {"covers", covering_pairs(q.order)}}.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < q.elements.size(); ++i) {
                    const auto& e = q.elements[i];
                    out << "e" << i << "  " << format_subset(e.extent_node, ctx.object_labels()) << "  "
                        << format_subset(e.intent_node, ctx.attribute_labels()) << "\n";
                    if (gm_exhaustive) {
                        for (Subset c : leaf_members(ctx, Side::P, e.extent_node)) {
                            out << "    C " << format_subset(c, ctx.object_labels()) << "\n";
                        }
                        for (Subset d : leaf_members(ctx, Side::Q, e.intent_node)) {
                            out << "    D " << format_subset(d, ctx.attribute_labels()) << "\n";
                        }
                    }
                }
                for (const auto& [lo, hi] : covering_pairs(q.order)) {
                    out << "e" << lo << " < e" << hi << "\n";
                }
            }
        } else if (order_cmd->parsed()) {
            const bool contexts = !ord_a.empty() || !ord_b.empty();
            const bool gcs = !ord_gc_a.empty() || !ord_gc_b.empty();
            if (contexts == gcs || (contexts && (ord_a.empty() || ord_b.empty())) ||
                (gcs && (ord_gc_a.empty() || ord_gc_b.empty()))) {
                err << "usage error: give either --a and --b or --gc-a and --gc-b\n";
                return 2;
            }
            if (contexts) {
                const auto a = load_context(ord_a);
                const auto b = load_context(ord_b);
                const std::string kind = ord_kind.empty() ? "relation" : ord_kind;
                if (kind == "relation") {
                    out << verdict_line(kind, le_relation(a, b));
                } else {
                    out << verdict_line(kind, compare_gcs(kind, materialized(a), materialized(b)));
                }
            } else {
                const std::string kind = ord_kind.empty() ? "pointwise" : ord_kind;
                if (kind == "relation") {
                    err << "usage error: --kind relation needs contexts\n";
                    return 2;
                }
                out << verdict_line(kind, compare_gcs(kind, load_gc(ord_gc_a), load_gc(ord_gc_b)));
            }
        } else if (gal_cmd->parsed()) {
            const auto gc = load_gc(gal_path);
            const auto report = validate_gc(gc);
            if (!report.ok()) {
                out << "connection: invalid\n" << report.to_string();
                code = 1;
            } else {
                out << "connection: valid\n";
                out << "perfect: " << (is_perfect(gc) ? "yes" : "no") << "\n";
                for (const Side side : {Side::P, Side::Q}) {
                    const Poset& X = side == Side::P ? gc.P() : gc.Q();
                    const auto ns = nodes(gc, side);
                    out << "nodes " << side_name(side) << ": " << format_elements(ns, X) << "\n";
                    out << "leaves " << side_name(side) << ":";
                    for (const auto& leaf : leaves(gc, side).leaves) {
                        out << " " << format_elements(leaf, X);
                    }
                    out << "\n";
                }
            }
        } else if (embed_cmd->parsed()) {
            const auto gc = load_gc(embed_path);
            if (!embed_relation.empty()) {
                write_output(embed_relation, write_cxt(embedding_relation(gc)), out);
            }
            if (embed_relation != "-" || !embed_out.empty()) {
                const auto emb = embed_into_polarity(gc);
                nlohmann::json j{{"polarity", gc_to_json(emb.polarity)},
                                 {"h", std::vector<Element>(emb.morphism.h().begin(), emb.morphism.h().end())},
                                 {"k", std::vector<Element>(emb.morphism.k().begin(), emb.morphism.k().end())}};
                write_output(embed_out, j.dump(2) + "\n", out);
            }
        } else if (morph_cmd->parsed()) {
            const auto src = load_gc(morph_src);
            const auto dst = load_gc(morph_dst);
            const auto h = parse_table(morph_h, dst.P(), "--h");
            const auto k = parse_table(morph_k, dst.Q(), "--k");
            const auto ch = characterize_morphism(src, dst, h, k);
            out << "morphism: " << (ch.commutes.holds ? "yes" : "no") << "\n";
            out << verdict_line("squares", ch.commutes);
            out << verdict_line("nodes", ch.preserves_nodes);
            out << verdict_line("levels", ch.preserves_levels);
            out << verdict_line("leaf pairs", ch.preserves_leaf_pairs);
            out << verdict_line("paths", ch.paths_agree);
        } else if (rdf_ingest->parsed()) {
            const auto triples = rdf::parse_ntriples(read_file(rdf_path), rdf_path);
            write_output(rdf_out, write_cxt(rdf::context_from_triples(triples)), out);
        } else if (rdf_schema->parsed()) {
            const bool is_cxt = rdf_path.size() >= 4 && rdf_path.compare(rdf_path.size() - 4, 4, ".cxt") == 0;
            const auto ctx = is_cxt ? load_context(rdf_path)
                                    : rdf::context_from_triples(rdf::parse_ntriples(read_file(rdf_path), rdf_path));
            if (rdf_out.empty() || rdf_out != "-") {
                out << rdf::format_schema(rdf::schema_classes(ctx), ctx);
            }
            if (!rdf_out.empty()) {
                write_output(rdf_out, export_dot(enumerate_concepts(ctx), ctx), out);
            }
        } else if (rdf_diff->parsed()) {
            const auto a = rdf::context_from_triples(rdf::parse_ntriples(read_file(rdf_path), rdf_path));
            const auto b = rdf::context_from_triples(rdf::parse_ntriples(read_file(rdf_new), rdf_new));
            const auto diff = rdf::schema_diff(a, b);
            if (rdf_json) {
                const auto& labels = diff.new_context.object_labels();
                const auto names = [&](const std::vector<Subset>& xs) {
                    std::vector<std::string> v;
                    for (Subset s : xs) {
                        v.push_back(format_subset(s, labels));
                    }
                    return v;
                };
                nlohmann::json j{{"added", names(diff.added)},
                                 {"removed", names(diff.removed)},
                                 {"preserved", names(diff.preserved)},
                                 {"relation_old_le_new", diff.relation_old_new.holds},
                                 {"relation_new_le_old", diff.relation_new_old.holds}};
                if (diff.preceq_pq) {
                    j["preceq_P"] = diff.preceq_p->holds;
                    j["preceq_Q"] = diff.preceq_q->holds;
                    j["preceq_PQ"] = diff.preceq_pq->holds;
                }
                out << j.dump(2) << "\n";
            } else {
                out << rdf::format_diff(diff);
            }
        } else if (oracle_cmd->parsed()) {
            if (oracle_cmd->count("--list") > 0) {
                for (const auto& name : oracle::sweep_names()) {
                    out << name << "\n";
                }
                return 0;
            }
            const auto xs = split(dims, 'x');
            std::size_t g = 0;
            std::size_t m = 0;
            try {
                if (xs.size() != 2) {
                    throw std::invalid_argument(dims);
                }
                g = std::stoul(xs[0]);
                m = std::stoul(xs[1]);
            } catch (const std::exception&) {
                err << "usage error: --max expects GxM, got '" << dims << "'\n";
                return 2;
            }
            spec.context_objects = g;
            spec.context_attributes = m;
            if (sweep_sel != "all") {
                spec.propositions = split(sweep_sel);
            }
            const auto report = oracle::sweep(spec);
            if (oracle_json) {
                out << oracle::to_json(report).dump(2) << "\n";
            } else {
                out << oracle::format_report(report);
            }
            if (verbose) {
                for (const auto& r : report.results) {
                    err << r.name << ": " << r.seconds << " s\n";
                }
            }
            code = report.ok() ? 0 : 1;
        }
        if (verbose) {
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            err << "galcore: finished in " << ms << " ms\n";
        }
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace galcore::cli
