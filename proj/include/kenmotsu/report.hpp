#pragma once

#include <string>
#include <vector>

namespace kenmotsu {

/// One named residual check.  Raw residuals are kept alongside the verdict
/// for tolerance forensics.
struct Check {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

inline Check make_check(std::string name, double residual, double tol) {
    return Check{std::move(name), residual, tol, residual < tol};
}

struct Report {
    std::vector<Check> checks;

    bool pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }

    double max_residual() const {
        double m = 0.0;
        for (const Check& c : checks) m = m > c.residual ? m : c.residual;
        return m;
    }

    const Check* find(const std::string& name) const {
        for (const Check& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    void append(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

} // namespace kenmotsu
