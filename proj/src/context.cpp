#include "galcore/context.hpp"

#include "galcore/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace galcore {

namespace {

std::vector<std::string> default_labels(char prefix, std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(prefix + std::to_string(i + 1));
    }
    return labels;
}

void check_carrier(const std::vector<std::string>& labels, const char* what) {
    if (labels.size() > kMaxCarrier) {
        throw CapExceeded(std::string(what) + " carrier has " + std::to_string(labels.size()) +
                          " elements; at most 64 are supported");
    }
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw Error(std::string("duplicate ") + what + " label '" + l + "'");
        }
    }
}

} // namespace

FormalContext::FormalContext(std::size_t objects, std::size_t attributes)
    : FormalContext(default_labels('g', objects), default_labels('m', attributes)) {}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes, std::string name)
    : name_{std::move(name)}, objects_{std::move(objects)}, attributes_{std::move(attributes)} {
    check_carrier(objects_, "object");
    check_carrier(attributes_, "attribute");
    rows_.assign(objects_.size(), 0);
    columns_.assign(attributes_.size(), 0);
}

void FormalContext::set_incident(Element g, Element m, bool value) {
    if (g >= object_count() || m >= attribute_count()) {
        throw DimensionMismatch("incidence (" + std::to_string(g) + "," + std::to_string(m) + ") outside a " +
                                std::to_string(object_count()) + "x" + std::to_string(attribute_count()) + " context");
    }
    if (value) {
        rows_[g] |= singleton(m);
        columns_[m] |= singleton(g);
    } else {
        rows_[g] &= ~singleton(m);
        columns_[m] &= ~singleton(g);
    }
}

std::size_t FormalContext::incidence_count() const noexcept {
    std::size_t n = 0;
    for (Subset r : rows_) {
        n += cardinality(r);
    }
    return n;
}

std::optional<Element> FormalContext::find_object(std::string_view label) const {
    auto it = std::find(objects_.begin(), objects_.end(), label);
    if (it == objects_.end()) {
        return std::nullopt;
    }
    return static_cast<Element>(it - objects_.begin());
}

std::optional<Element> FormalContext::find_attribute(std::string_view label) const {
    auto it = std::find(attributes_.begin(), attributes_.end(), label);
    if (it == attributes_.end()) {
        return std::nullopt;
    }
    return static_cast<Element>(it - attributes_.begin());
}

Subset H(const FormalContext& ctx, Subset objects) {
    if (!is_subset(objects, ctx.all_objects())) {
        throw DimensionMismatch("object subset " + format_subset(objects) + " is not within G");
    }
    Subset out = ctx.all_attributes();
    for_each_member(objects, [&](std::size_t g) { out &= ctx.row(g); });
    return out;
}

Subset K(const FormalContext& ctx, Subset attributes) {
    if (!is_subset(attributes, ctx.all_attributes())) {
        throw DimensionMismatch("attribute subset " + format_subset(attributes) + " is not within M");
    }
    Subset out = ctx.all_objects();
    for_each_member(attributes, [&](std::size_t m) { out &= ctx.column(m); });
    return out;
}

Subset closure_GG(const FormalContext& ctx, Subset objects) { return K(ctx, H(ctx, objects)); }

Subset closure_MM(const FormalContext& ctx, Subset attributes) { return H(ctx, K(ctx, attributes)); }

Polarity::Polarity(FormalContext ctx) : ctx_{std::make_shared<const FormalContext>(std::move(ctx))} {}

bool Polarity::materializable(std::size_t cap) const noexcept {
    return ctx_->object_count() <= cap && ctx_->attribute_count() <= cap;
}

std::optional<GaloisConnection> Polarity::materialize(std::size_t cap) const {
    if (!materializable(cap)) {
        return std::nullopt;
    }
    const std::size_t n_subsets_g = std::size_t{1} << ctx_->object_count();
    const std::size_t n_subsets_m = std::size_t{1} << ctx_->attribute_count();
    std::vector<Element> f(n_subsets_g);
    std::vector<Element> g(n_subsets_m);
    for (std::size_t a = 0; a < n_subsets_g; ++a) {
        f[a] = H(a);
    }
    for (std::size_t b = 0; b < n_subsets_m; ++b) {
        g[b] = K(b);
    }
    return GaloisConnection{shared_powerset(ctx_->object_count()), shared_powerset(ctx_->attribute_count()),
                            std::move(f), std::move(g)};
}

std::optional<GaloisConnection> Polarity::materialize() const { return materialize(materialization_cap()); }

Polarity polarity_of(const FormalContext& ctx) { return Polarity{ctx}; }

FormalContext relation_of(const GaloisConnection& polarity) {
    const auto g_rank = powerset_rank(polarity.P());
    const auto m_rank = powerset_rank(polarity.Q());
    if (!g_rank || !m_rank) {
        throw NotPowersetLattice("relation_of needs a connection between subset lattices; got posets of size " +
                                 std::to_string(polarity.P().size()) + " and " + std::to_string(polarity.Q().size()));
    }
    FormalContext ctx(*g_rank, *m_rank);
    for (Element g = 0; g < *g_rank; ++g) {
        const Subset attrs = polarity.f()(singleton(g));
        for_each_member(attrs, [&](std::size_t m) { ctx.set_incident(g, m); });
    }
    return ctx;
}

FormalContext relation_of(const Polarity& polarity) {
    const FormalContext& src = polarity.context();
    FormalContext ctx(src.object_labels(), src.attribute_labels(), src.name());
    for (Element g = 0; g < src.object_count(); ++g) {
        for_each_member(polarity.H(singleton(g)), [&](std::size_t m) { ctx.set_incident(g, m); });
    }
    return ctx;
}

namespace {

class LineReader {
  public:
    explicit LineReader(std::string_view text) : text_{text} {}

    bool next(std::string_view& line) {
        if (pos_ > text_.size() || (pos_ == text_.size() && !text_.empty() && text_.back() == '\n')) {
            return false;
        }
        auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos) {
            end = text_.size();
        }
        line = text_.substr(pos_, end - pos_);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        pos_ = end + 1;
        ++number_;
        return true;
    }

    std::string_view expect(const char* what) {
        std::string_view line;
        if (!next(line)) {
            throw ParseError(number_ + 1, std::string("unexpected end of file, expected ") + what);
        }
        return line;
    }

    [[nodiscard]] std::size_t number() const noexcept { return number_; }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t number_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::size_t parse_count(std::string_view line, std::size_t number, const char* what) {
    line = trim(line);
    if (line.empty() || !std::all_of(line.begin(), line.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError(number, std::string("expected ") + what + ", got '" + std::string(line) + "'");
    }
    if (line.size() > 3) {
        throw CapExceeded("line " + std::to_string(number) + ": " + what + " " + std::string(line) +
                          " exceeds the 64-element carrier limit");
    }
    std::size_t value = 0;
    for (char c : line) {
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value > kMaxCarrier) {
        throw CapExceeded("line " + std::to_string(number) + ": " + what + " " + std::to_string(value) +
                          " exceeds the 64-element carrier limit");
    }
    return value;
}

} // namespace

FormalContext parse_cxt(std::string_view text) {
    LineReader in{text};
    if (trim(in.expect("header 'B'")) != "B") {
        throw ParseError(in.number(), "malformed header: expected 'B'");
    }
    std::string name{trim(in.expect("context name"))};
    if (!trim(in.expect("blank line")).empty()) {
        throw ParseError(in.number(), "malformed header: expected a blank line after the name");
    }
    // expect() must run before number() is read
    const std::string_view objects_line = in.expect("object count");
    const std::size_t n_objects = parse_count(objects_line, in.number(), "object count");
    const std::string_view attributes_line = in.expect("attribute count");
    const std::size_t n_attributes = parse_count(attributes_line, in.number(), "attribute count");
    if (!trim(in.expect("blank line")).empty()) {
        throw ParseError(in.number(), "malformed header: expected a blank line after the counts");
    }
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    for (std::size_t i = 0; i < n_objects; ++i) {
        objects.emplace_back(in.expect("object name"));
    }
    for (std::size_t i = 0; i < n_attributes; ++i) {
        attributes.emplace_back(in.expect("attribute name"));
    }
    const std::size_t labels_end = in.number();
    FormalContext ctx = [&] {
        try {
            return FormalContext(std::move(objects), std::move(attributes), std::move(name));
        } catch (const CapExceeded&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(labels_end, e.what());
        }
    }();
    for (Element g = 0; g < n_objects; ++g) {
        const std::string_view row = trim(in.expect("incidence row"));
        if (row.size() != n_attributes) {
            throw ParseError(in.number(), "dimension mismatch: row has " + std::to_string(row.size()) +
                                              " characters, expected " + std::to_string(n_attributes));
        }
        for (Element m = 0; m < n_attributes; ++m) {
            const char c = row[m];
            if (c == 'X' || c == 'x') {
                ctx.set_incident(g, m);
            } else if (c != '.') {
                throw ParseError(in.number(), std::string("illegal character '") + c + "' in incidence row");
            }
        }
    }
    std::string_view rest;
    while (in.next(rest)) {
        if (!trim(rest).empty()) {
            throw ParseError(in.number(), "dimension mismatch: more incidence rows than objects");
        }
    }
    return ctx;
}

std::string write_cxt(const FormalContext& ctx) {
    std::ostringstream out;
    out << "B\n" << ctx.name() << "\n\n" << ctx.object_count() << '\n' << ctx.attribute_count() << "\n\n";
    for (const auto& l : ctx.object_labels()) {
        out << l << '\n';
    }
    for (const auto& l : ctx.attribute_labels()) {
        out << l << '\n';
    }
    for (Element g = 0; g < ctx.object_count(); ++g) {
        for (Element m = 0; m < ctx.attribute_count(); ++m) {
            out << (ctx.incident(g, m) ? 'X' : '.');
        }
        out << '\n';
    }
    return out.str();
}

std::string format_context(const FormalContext& ctx) {
    std::size_t width = 0;
    for (const auto& l : ctx.object_labels()) {
        width = std::max(width, l.size());
    }
    std::ostringstream out;
    out << std::string(width, ' ');
    for (const auto& l : ctx.attribute_labels()) {
        out << ' ' << l;
    }
    out << '\n';
    for (Element g = 0; g < ctx.object_count(); ++g) {
        const auto& l = ctx.object_labels()[g];
        out << l << std::string(width - l.size(), ' ');
        for (Element m = 0; m < ctx.attribute_count(); ++m) {
            const auto& a = ctx.attribute_labels()[m];
            out << ' ' << std::string(a.size() > 0 ? a.size() - 1 : 0, ' ') << (ctx.incident(g, m) ? 'X' : '.');
        }
        out << '\n';
    }
    return out.str();
}

} // namespace galcore
