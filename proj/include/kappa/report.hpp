#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kappa/betti.hpp"
#include "kappa/obstruction.hpp"
#include "kappa/serialize.hpp"

namespace kappa {

struct Report {
    std::string field;
    KappaVector kappa;
    BettiTable betti;
    SmoothabilityVerdict verdict;
    AdmissibilityReport admissible;
    std::vector<std::string> advisories;
};

nlohmann::json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

// Full report: kappa vector, Betti table, smoothability verdict,
// admissibility check, and the conditional-smoothability advisories for
// nets (e = 3) in low embedding dimension.
template <class S>
Report make_report(const QuadricSpace<S>& v, const FieldOf<S>& field, std::uint64_t seed) {
    Report r;
    r.field = field.name();
    r.kappa = kappa_vector(v);
    r.betti = betti_table(r.kappa);
    r.verdict = smoothability_verdict(r.kappa);
    r.admissible = check_kappa_admissible(r.kappa);
    if (!r.verdict.obstructed && v.e() == 3) {
        if (v.d <= 8) {
            r.advisories.push_back("both conditions hold and d <= 8: smoothable in characteristic zero");
        } else if (v.d <= 11) {
            try {
                ProbeResult probe = nonsingular_quadric_probe(v, 24, seed, field);
                if (probe.certain_nonsingular)
                    r.advisories.push_back(
                        "both conditions hold, the net contains a nonsingular quadric, and d <= 11: "
                        "smoothable in characteristic zero");
            } catch (const Error&) {
                // field too small for the probe; no advisory
            }
        }
    }
    return r;
}

}  // namespace kappa
