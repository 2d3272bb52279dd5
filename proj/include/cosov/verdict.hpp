#pragma once

#include <string>
#include <vector>

namespace cosov {

/// Outcome of a degree-truncated ideal membership query. member and
/// not_member are certified; inconclusive carries the degree bound used.
enum class Membership { member, not_member, inconclusive };

struct MembershipResult {
    Membership status;
    int degree = 0;

    bool is_member() const { return status == Membership::member; }
};

/// Aggregated outcome of an axiom check. pass/fail are sound verdicts;
/// inconclusive means the membership oracle ran out of degree.
enum class CheckStatus { pass, fail, inconclusive };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail; // witness or values
    int degree = -1;    // degree bound used, when meaningful

    static CheckResult pass(std::string name, std::string detail = "", int degree = -1) {
        return {std::move(name), CheckStatus::pass, std::move(detail), degree};
    }
    static CheckResult fail(std::string name, std::string detail = "", int degree = -1) {
        return {std::move(name), CheckStatus::fail, std::move(detail), degree};
    }
    static CheckResult inconclusive(std::string name, std::string detail = "", int degree = -1) {
        return {std::move(name), CheckStatus::inconclusive, std::move(detail), degree};
    }

    bool ok() const { return status == CheckStatus::pass; }
};

struct Report {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
    size_t count(CheckStatus s) const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }
    bool all_pass() const { return count(CheckStatus::pass) == checks.size(); }
    bool any_fail() const { return count(CheckStatus::fail) > 0; }
};

/// Combine per-item statuses: any fail dominates, else any inconclusive.
inline CheckStatus combine(CheckStatus a, CheckStatus b) {
    if (a == CheckStatus::fail || b == CheckStatus::fail) return CheckStatus::fail;
    if (a == CheckStatus::inconclusive || b == CheckStatus::inconclusive)
        return CheckStatus::inconclusive;
    return CheckStatus::pass;
}

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "Pass";
        case CheckStatus::fail: return "Fail";
        default: return "Inconclusive";
    }
}

} // namespace cosov
