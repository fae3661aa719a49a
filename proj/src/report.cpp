#include "kappa/report.hpp"

#include <sstream>

namespace kappa {

namespace {

nlohmann::json condition_to_json(const ConditionCheck& c) {
    return {{"j", c.j}, {"value", c.value}, {"bound", c.bound}, {"ok", c.ok}};
}

}  // namespace

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json star = nlohmann::json::array();
    for (const auto& c : r.verdict.condition_star) star.push_back(condition_to_json(c));
    nlohmann::json j{
        {"schema_version", 1},
        {"field", r.field},
        {"d", r.kappa.d},
        {"e", r.kappa.e},
        {"kappa", r.kappa.entries},
        {"verdict", r.verdict.obstructed ? "obstructed" : "unobstructed"},
        {"conditions",
         {{"star", std::move(star)},
          {"star_star", r.verdict.condition_star_star ? condition_to_json(*r.verdict.condition_star_star)
                                                      : nlohmann::json(nullptr)}}},
        {"betti", {{"top", r.betti.top}, {"bottom", r.betti.bottom}, {"m", r.betti.m}}},
        {"admissible", {{"ok", r.admissible.ok}, {"violation", r.admissible.first_violation}}},
        {"advisories", r.advisories},
    };
    return j;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "field: " << r.field << "  d: " << r.kappa.d << "  e: " << r.kappa.e << "\n";
    os << "kappa: " << to_string(r.kappa) << "\n";
    os << "betti:\n" << render_betti(r.betti) << "\n";
    os << "verdict: " << (r.verdict.obstructed ? "OBSTRUCTED (nonsmoothable)" : "unobstructed") << "\n";
    for (const auto& c : r.verdict.condition_star)
        os << "  (*)  j=" << c.j << ": " << c.value << " <= " << c.bound << "  " << (c.ok ? "ok" : "FAIL") << "\n";
    if (r.verdict.condition_star_star) {
        const auto& c = *r.verdict.condition_star_star;
        os << "  (**) j=1: " << c.value << " <= " << c.bound << "  " << (c.ok ? "ok" : "FAIL") << "\n";
    }
    os << "admissible: " << (r.admissible.ok ? "yes" : "NO (" + r.admissible.first_violation + ")") << "\n";
    for (const auto& a : r.advisories) os << "note: " << a << "\n";
    return os.str();
}

}  // namespace kappa
