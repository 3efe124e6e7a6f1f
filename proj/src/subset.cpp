#include "galcore/subset.hpp"

#include "galcore/report.hpp"

#include <algorithm>
#include <sstream>

namespace galcore {

std::vector<Element> members(Subset s) {
    std::vector<Element> out;
    out.reserve(cardinality(s));
    for_each_member(s, [&](std::size_t i) { out.push_back(i); });
    return out;
}

Subset subset_of(std::span<const Element> elements) {
    Subset s = 0;
    for (Element e : elements) {
        s |= singleton(e);
    }
    return s;
}

std::string format_subset(Subset s, std::span<const std::string> labels) {
    std::string out = "{";
    bool first = true;
    for_each_member(s, [&](std::size_t i) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += i < labels.size() ? labels[i] : std::to_string(i);
    });
    out += '}';
    return out;
}

void ValidationReport::add(std::string rule, std::vector<Element> witness, std::string detail) {
    violations_.push_back({std::move(rule), std::move(witness), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

bool ValidationReport::has(const std::string& rule) const {
    return std::any_of(violations_.begin(), violations_.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::to_string() const {
    if (ok()) {
        return "ok\n";
    }
    std::ostringstream out;
    for (const auto& v : violations_) {
        out << v.rule << " (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            out << (i ? "," : "") << v.witness[i];
        }
        out << ")";
        if (!v.detail.empty()) {
            out << ": " << v.detail;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace galcore
