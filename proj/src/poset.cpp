#include "galcore/poset.hpp"

#include "galcore/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace galcore {

namespace {

constexpr std::size_t kDefaultCap = 12;
constexpr std::size_t kHardCap = 14;

std::string subset_label(Subset s) { return format_subset(s); }

} // namespace

Poset::Poset(std::size_t size, std::vector<std::string> labels)
    : size_{size}, words_{(size + 63) / 64}, bits_(size * ((size + 63) / 64), 0), labels_{std::move(labels)} {
    if (!labels_.empty() && labels_.size() != size_) {
        throw DimensionMismatch("poset has " + std::to_string(size_) + " elements but " +
                                std::to_string(labels_.size()) + " labels");
    }
}

Poset Poset::from_matrix(const std::vector<std::vector<bool>>& leq, std::vector<std::string> labels) {
    const std::size_t n = leq.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (leq[x].size() != n) {
            throw DimensionMismatch("leq row " + std::to_string(x) + " has " + std::to_string(leq[x].size()) +
                                    " entries, expected " + std::to_string(n));
        }
    }
    return from_predicate(n, [&](Element x, Element y) { return leq[x][y]; }, std::move(labels));
}

std::string Poset::label(Element x) const { return x < labels_.size() ? labels_[x] : std::to_string(x); }

std::optional<Element> Poset::find_label(const std::string& name) const {
    for (Element x = 0; x < size_; ++x) {
        if (label(x) == name) {
            return x;
        }
    }
    return std::nullopt;
}

bool same_poset(const PosetRef& a, const PosetRef& b) noexcept { return a == b || (a && b && *a == *b); }

OrderMap::OrderMap(PosetRef dom, PosetRef cod, std::vector<Element> table)
    : dom_{std::move(dom)}, cod_{std::move(cod)}, table_{std::move(table)} {
    if (table_.size() != dom_->size()) {
        throw DimensionMismatch("map table has " + std::to_string(table_.size()) + " entries for a domain of " +
                                std::to_string(dom_->size()));
    }
    for (std::size_t x = 0; x < table_.size(); ++x) {
        if (table_[x] >= cod_->size()) {
            throw DimensionMismatch("map sends " + std::to_string(x) + " to " + std::to_string(table_[x]) +
                                    ", outside a codomain of " + std::to_string(cod_->size()));
        }
    }
}

ValidationReport validate_poset(const Poset& p) {
    ValidationReport report;
    const std::size_t n = p.size();
    for (Element x = 0; x < n; ++x) {
        if (!p.leq(x, x)) {
            report.add("reflexivity", {x});
        }
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
            if (p.leq(x, y) && p.leq(y, x)) {
                report.add("antisymmetry", {x, y});
            }
        }
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (!p.leq(x, y)) {
                continue;
            }
            for (Element z = 0; z < n; ++z) {
                if (p.leq(y, z) && !p.leq(x, z)) {
                    report.add("transitivity", {x, y, z});
                }
            }
        }
    }
    return report;
}

bool is_antitone(const OrderMap& m) {
    const Poset& d = m.dom();
    const Poset& c = m.cod();
    for (Element x = 0; x < d.size(); ++x) {
        for (Element y = 0; y < d.size(); ++y) {
            if (d.leq(x, y) && !c.leq(m(y), m(x))) {
                return false;
            }
        }
    }
    return true;
}

bool is_monotone(const OrderMap& m) {
    const Poset& d = m.dom();
    const Poset& c = m.cod();
    for (Element x = 0; x < d.size(); ++x) {
        for (Element y = 0; y < d.size(); ++y) {
            if (d.leq(x, y) && !c.leq(m(x), m(y))) {
                return false;
            }
        }
    }
    return true;
}

Subset downset(const Poset& p, Element x) {
    if (p.size() > kMaxCarrier) {
        throw CapExceeded("downset as a bitmask needs at most 64 elements, poset has " + std::to_string(p.size()));
    }
    if (x >= p.size()) {
        throw std::out_of_range("element " + std::to_string(x) + " outside poset of size " + std::to_string(p.size()));
    }
    Subset s = 0;
    for (Element y = 0; y < p.size(); ++y) {
        if (p.leq(y, x)) {
            s |= singleton(y);
        }
    }
    return s;
}

Subset upset(const Poset& p, Element x) {
    if (p.size() > kMaxCarrier) {
        throw CapExceeded("upset as a bitmask needs at most 64 elements, poset has " + std::to_string(p.size()));
    }
    if (x >= p.size()) {
        throw std::out_of_range("element " + std::to_string(x) + " outside poset of size " + std::to_string(p.size()));
    }
    Subset s = 0;
    for (Element y = 0; y < p.size(); ++y) {
        if (p.leq(x, y)) {
            s |= singleton(y);
        }
    }
    return s;
}

namespace {

template <class Leq>
std::optional<Element> least_bound(std::size_t n, std::span<const Element> s, Leq leq) {
    std::vector<Element> bounds;
    for (Element u = 0; u < n; ++u) {
        bool bound = true;
        for (Element x : s) {
            if (!leq(x, u)) {
                bound = false;
                break;
            }
        }
        if (bound) {
            bounds.push_back(u);
        }
    }
    for (Element u : bounds) {
        bool least = true;
        for (Element v : bounds) {
            if (!leq(u, v)) {
                least = false;
                break;
            }
        }
        if (least) {
            return u;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Element> join(const Poset& p, std::span<const Element> s) {
    return least_bound(p.size(), s, [&](Element a, Element b) { return p.leq(a, b); });
}

std::optional<Element> meet(const Poset& p, std::span<const Element> s) {
    return least_bound(p.size(), s, [&](Element a, Element b) { return p.leq(b, a); });
}

Extremes top_bottom(const Poset& p) {
    return {meet(p, {}), join(p, {})};
}

bool is_complete_lattice(const Poset& p) {
    const std::size_t n = p.size();
    if (n == 0) {
        return false;
    }
    auto [top, bottom] = top_bottom(p);
    if (!top || !bottom) {
        return false;
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
            const Element pair[] = {x, y};
            if (!join(p, pair) || !meet(p, pair)) {
                return false;
            }
        }
    }
    return true;
}

Poset induced(const Poset& p, std::span<const Element> elements) {
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (Element e : elements) {
        labels.push_back(p.label(e));
    }
    return Poset::from_predicate(
        elements.size(), [&](Element x, Element y) { return p.leq(elements[x], elements[y]); }, std::move(labels));
}

Poset chain(std::size_t n) {
    return Poset::from_predicate(n, [](Element x, Element y) { return x <= y; });
}

Poset antichain(std::size_t n) {
    return Poset::from_predicate(n, [](Element x, Element y) { return x == y; });
}

Poset diamond() {
    return Poset::from_predicate(
        4, [](Element x, Element y) { return x == y || x == 0 || y == 3; }, {"bot", "a", "b", "top"});
}

Poset powerset_poset(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw CapExceeded("powerset of " + std::to_string(n) + " points exceeds the materialization cap of " +
                          std::to_string(cap));
    }
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::string> labels;
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        labels.push_back(subset_label(i));
    }
    return Poset::from_predicate(
        size, [](Element x, Element y) { return (x & y) == x; }, std::move(labels));
}

Poset powerset_poset(std::size_t n) { return powerset_poset(n, materialization_cap()); }

PosetRef shared_powerset(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, PosetRef> cache;
    std::lock_guard lock{mutex};
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, share(powerset_poset(n, kHardCap))).first;
    }
    return it->second;
}

std::optional<std::size_t> powerset_rank(const Poset& p) {
    const std::size_t n = p.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        return std::nullopt;
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (p.leq(x, y) != ((x & y) == x)) {
                return std::nullopt;
            }
        }
    }
    return static_cast<std::size_t>(std::countr_zero(n));
}

std::size_t materialization_cap() {
    const char* env = std::getenv("GALCORE_CAP");
    if (env == nullptr) {
        return kDefaultCap;
    }
    std::string_view text{env};
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        return kDefaultCap;
    }
    return std::min(value, kHardCap);
}

} // namespace galcore
