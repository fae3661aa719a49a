#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "kappa/forms.hpp"
#include "kappa/points.hpp"

namespace kappa {

// "Q" or "fp:<prime>" with the characteristic restrictions enforced.
struct FieldSpec {
    bool is_q = true;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {true, 0}; }
    static FieldSpec prime_field(std::uint32_t p) {
        validate_modulus(p);
        return {false, p};
    }
    static FieldSpec parse(const std::string& text);
    std::string to_string() const { return is_q ? "Q" : "fp:" + std::to_string(p); }
};

// A space document with entries still in rational form; realize() converts
// into the working field.
struct ParsedSpaceDoc {
    FieldSpec field;
    Index d = 0;
    std::vector<Mat<Rational>> gram;
};

ParsedSpaceDoc read_space_document(const nlohmann::json& doc);
ParsedSpaceDoc read_space_document_text(const std::string& text);

template <class S>
QuadricSpace<S> realize(const ParsedSpaceDoc& doc, const FieldOf<S>& field) {
    std::vector<Mat<S>> forms;
    forms.reserve(doc.gram.size());
    for (const auto& g : doc.gram) forms.push_back(mat_from_rational(g, field));
    return make_space(std::move(forms));
}

nlohmann::json space_to_json(const QuadricSpace<Rational>& v, const FieldSpec& field);
nlohmann::json space_to_json(const QuadricSpace<Fp>& v, const FieldSpec& field);

// Point configurations: JSON {"field":..., "d":..., "points":[[...]]} or CSV
// with one point per row and d rational columns.
struct ParsedPointsDoc {
    FieldSpec field;
    Index d = 0;
    std::vector<Vec<Rational>> points;
};

ParsedPointsDoc read_points_json(const nlohmann::json& doc);
ParsedPointsDoc read_points_csv(std::istream& in);
ParsedPointsDoc read_points_file(const std::string& path);

template <class S>
PointConfiguration<S> realize_points(const ParsedPointsDoc& doc, const FieldOf<S>& field) {
    std::vector<Vec<S>> pts;
    pts.reserve(doc.points.size());
    for (const auto& p : doc.points) {
        Vec<S> v(doc.d);
        for (Index i = 0; i < doc.d; ++i) v(i) = field.from_rational(p(i));
        pts.push_back(std::move(v));
    }
    return make_points(doc.d, std::move(pts));
}

}  // namespace kappa
