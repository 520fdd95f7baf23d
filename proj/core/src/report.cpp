#include "mhad/report.hpp"

#include <sstream>

namespace mhad {

bool CheckReport::add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back(Check{name, pass, pass ? std::string() : detail});
    return pass;
}

void CheckReport::merge(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool CheckReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::size_t CheckReport::failures() const {
    std::size_t k = 0;
    for (const auto& c : checks)
        if (!c.pass) ++k;
    return k;
}

const Check* CheckReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string CheckReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass && !c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace mhad
