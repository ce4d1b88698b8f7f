#pragma once

#include <string>
#include <vector>

namespace lcs {

struct Check {
    std::string label;
    bool pass = false;
    std::string detail;
};

/// Flat list of named pass/fail checks; the building block of every textual
/// and structured report the engine emits.
struct Report {
    std::string title;
    std::vector<Check> checks;

    explicit Report(std::string t = "") : title(std::move(t)) {}

    void add(std::string label, bool pass, std::string detail = "")
    {
        checks.push_back({std::move(label), pass, std::move(detail)});
    }

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    std::size_t fail_count() const
    {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass)
                ++n;
        return n;
    }

    void merge(const Report& other)
    {
        for (const auto& c : other.checks)
            checks.push_back(c);
    }
};

}  // namespace lcs
