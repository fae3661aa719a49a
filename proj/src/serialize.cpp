#include "kappa/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "kappa/parser.hpp"

namespace kappa {

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw BadField("bad field spec '" + text + "'");
        unsigned long p = std::stoul(num);
        if (p > kMaxModulus) throw BadField("modulus too large (must fit in 31 bits)");
        return prime_field(static_cast<std::uint32_t>(p));
    }
    throw BadField("bad field spec '" + text + "' (expected Q or fp:<prime>)");
}

namespace {

Mat<Rational> gram_from_json(const nlohmann::json& elem, Index d) {
    if (elem.is_object() && elem.contains("poly")) {
        if (!elem["poly"].is_string()) throw FormatError("\"poly\" must be a string");
        return parse_form(elem["poly"].get<std::string>(), d);
    }
    if (elem.is_object() && elem.contains("matrix")) {
        const auto& rows = elem["matrix"];
        if (!rows.is_array() || static_cast<Index>(rows.size()) != d)
            throw FormatError("\"matrix\" must be a " + std::to_string(d) + "-row array");
        Mat<Rational> m(d, d);
        for (Index i = 0; i < d; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<Index>(row.size()) != d) throw FormatError("matrix row of wrong length");
            for (Index j = 0; j < d; ++j) {
                const auto& cell = row[static_cast<std::size_t>(j)];
                if (cell.is_string())
                    m(i, j) = Rational::from_string(cell.get<std::string>());
                else if (cell.is_number_integer())
                    m(i, j) = Rational(cell.get<long>());
                else
                    throw FormatError("matrix entries must be rational strings or integers");
            }
        }
        if (!is_symmetric(m)) throw FormatError("matrix basis element is not symmetric");
        return m;
    }
    throw FormatError("basis element needs a \"poly\" or \"matrix\" key");
}

}  // namespace

ParsedSpaceDoc read_space_document(const nlohmann::json& doc) {
    if (!doc.is_object()) throw FormatError("space document must be a JSON object");
    if (!doc.contains("field") || !doc["field"].is_string()) throw FormatError("missing \"field\"");
    if (!doc.contains("d") || !doc["d"].is_number_integer()) throw FormatError("missing integer \"d\"");
    if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].empty())
        throw FormatError("missing nonempty \"basis\" array");
    ParsedSpaceDoc out;
    out.field = FieldSpec::parse(doc["field"].get<std::string>());
    out.d = doc["d"].get<long>();
    if (out.d < 1) throw FormatError("d must be positive");
    for (const auto& elem : doc["basis"]) out.gram.push_back(gram_from_json(elem, out.d));
    return out;
}

ParsedSpaceDoc read_space_document_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw FormatError("invalid JSON");
    return read_space_document(doc);
}

namespace {

template <class S>
nlohmann::json space_to_json_impl(const QuadricSpace<S>& v, const FieldSpec& field,
                                  std::string (*entry)(const S&)) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& a : v.basis) {
        nlohmann::json rows = nlohmann::json::array();
        for (Index i = 0; i < v.d; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (Index j = 0; j < v.d; ++j) row.push_back(entry(a(i, j)));
            rows.push_back(std::move(row));
        }
        basis.push_back(nlohmann::json{{"matrix", std::move(rows)}});
    }
    return nlohmann::json{{"field", field.to_string()}, {"d", v.d}, {"basis", std::move(basis)}};
}

}  // namespace

nlohmann::json space_to_json(const QuadricSpace<Rational>& v, const FieldSpec& field) {
    return space_to_json_impl<Rational>(v, field, +[](const Rational& r) { return r.to_string(); });
}

nlohmann::json space_to_json(const QuadricSpace<Fp>& v, const FieldSpec& field) {
    return space_to_json_impl<Fp>(v, field, +[](const Fp& x) { return std::to_string(x.value()); });
}

ParsedPointsDoc read_points_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw FormatError("points document must be a JSON object");
    ParsedPointsDoc out;
    out.field = doc.contains("field") ? FieldSpec::parse(doc["field"].get<std::string>()) : FieldSpec::rationals();
    if (!doc.contains("d") || !doc["d"].is_number_integer()) throw FormatError("missing integer \"d\"");
    out.d = doc["d"].get<long>();
    if (!doc.contains("points") || !doc["points"].is_array()) throw FormatError("missing \"points\" array");
    for (const auto& row : doc["points"]) {
        if (!row.is_array() || static_cast<Index>(row.size()) != out.d) throw FormatError("point row of wrong length");
        Vec<Rational> v(out.d);
        for (Index i = 0; i < out.d; ++i) {
            const auto& cell = row[static_cast<std::size_t>(i)];
            if (cell.is_string())
                v(i) = Rational::from_string(cell.get<std::string>());
            else if (cell.is_number_integer())
                v(i) = Rational(cell.get<long>());
            else
                throw FormatError("point entries must be rational strings or integers");
        }
        out.points.push_back(std::move(v));
    }
    return out;
}

ParsedPointsDoc read_points_csv(std::istream& in) {
    ParsedPointsDoc out;
    out.field = FieldSpec::rationals();
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::vector<Rational> cells;
        std::stringstream ss(trimmed);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                cells.push_back(Rational::from_string(cell));
            } catch (const FormatError& e) {
                throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (cells.empty()) throw FormatError("line " + std::to_string(lineno) + ": empty row");
        if (out.points.empty()) {
            out.d = static_cast<Index>(cells.size());
        } else if (static_cast<Index>(cells.size()) != out.d) {
            throw FormatError("line " + std::to_string(lineno) + ": row of length " + std::to_string(cells.size()) +
                              ", expected " + std::to_string(out.d));
        }
        Vec<Rational> v(out.d);
        for (Index i = 0; i < out.d; ++i) v(i) = cells[static_cast<std::size_t>(i)];
        out.points.push_back(std::move(v));
    }
    if (out.points.empty()) throw FormatError("no points in CSV input");
    return out;
}

ParsedPointsDoc read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
        if (doc.is_discarded()) throw FormatError("invalid JSON in '" + path + "'");
        return read_points_json(doc);
    }
    return read_points_csv(in);
}

}  // namespace kappa
