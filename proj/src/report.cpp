#include "corings/report.hpp"

#include <sstream>

namespace corings {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Absent: return "absent";
        case Verdict::PurityFailure: return "purity_failure";
        case Verdict::NotProjective: return "not_projective";
    }
    return "?";
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "verdict " << verdict_name(verdict) << "\n";
    for (const auto& c : checks) {
        os << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.ok && !c.witness.empty()) os << " witness " << c.witness;
        os << "\n";
    }
    return os.str();
}

}  // namespace corings
