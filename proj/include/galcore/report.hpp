#pragma once

#include "galcore/subset.hpp"

#include <string>
#include <vector>

namespace galcore {

struct Violation {
    std::string rule;
    std::vector<Element> witness;
    std::string detail;
};

/// Collects every violated rule together with its witness. Empty means valid.
class ValidationReport {
  public:
    void add(std::string rule, std::vector<Element> witness, std::string detail = {});
    void merge(const ValidationReport& other);

    [[nodiscard]] bool ok() const noexcept { return violations_.empty(); }
    [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }
    [[nodiscard]] bool has(const std::string& rule) const;

    [[nodiscard]] std::string to_string() const;

  private:
    std::vector<Violation> violations_;
};

} // namespace galcore
