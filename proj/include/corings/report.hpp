#pragma once

#include <string>
#include <vector>

namespace corings {

enum class Verdict { Pass, Fail, Absent, PurityFailure, NotProjective };

std::string verdict_name(Verdict v);

struct CheckItem {
    std::string name;
    bool ok = true;
    std::string witness;  // basis indices / location of the first failure
};

/// Result of an axiom or property sweep. Failing verdicts always carry at
/// least one witnessing check item.
struct Report {
    Verdict verdict = Verdict::Pass;
    std::vector<CheckItem> checks;

    bool ok() const { return verdict == Verdict::Pass; }

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        checks.push_back({name, pass, witness});
        if (!pass && verdict == Verdict::Pass) verdict = Verdict::Fail;
    }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.checks)
            checks.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.ok, c.witness});
        if (!other.ok() && verdict == Verdict::Pass) verdict = other.verdict;
    }

    std::string to_text() const;
};

}  // namespace corings
