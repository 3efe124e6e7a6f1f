#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace galcore {

/// Element of a finite carrier, identified by its dense index.
using Element = std::size_t;

/// Subset of a carrier of at most 64 elements; bit i set iff element i is a member.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

constexpr Subset full_subset(std::size_t n) noexcept {
    return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

constexpr Subset singleton(std::size_t i) noexcept { return Subset{1} << i; }

constexpr bool contains(Subset s, std::size_t i) noexcept { return ((s >> i) & 1U) != 0; }

constexpr bool is_subset(Subset a, Subset b) noexcept { return (a & ~b) == 0; }

constexpr std::size_t cardinality(Subset s) noexcept { return static_cast<std::size_t>(std::popcount(s)); }

template <class Fn>
constexpr void for_each_member(Subset s, Fn&& fn) {
    while (s != 0) {
        fn(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
}

std::vector<Element> members(Subset s);

Subset subset_of(std::span<const Element> elements);

/// Renders `{a,b}` using the given labels, or indices when labels are empty.
std::string format_subset(Subset s, std::span<const std::string> labels = {});

} // namespace galcore
