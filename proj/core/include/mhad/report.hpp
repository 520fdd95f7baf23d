// Named pass/fail checks collected into reports. Every validation battery
// in the library returns one of these instead of throwing, so a single run
// can list everything that is wrong with an input.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mhad {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // witness of the first failure, or empty
};

struct CheckReport {
    std::vector<Check> checks;

    // Returns pass so call sites can chain: if (!rep.add(...)) ...
    bool add(const std::string& name, bool pass, const std::string& detail = "");
    void merge(const CheckReport& other);

    bool ok() const;
    std::size_t failures() const;
    const Check* find(const std::string& name) const;

    // One line per check, "PASS name" / "FAIL name: detail".
    std::string to_string() const;
};

}  // namespace mhad
