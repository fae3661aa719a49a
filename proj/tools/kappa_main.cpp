#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "kappa/dimension.hpp"
#include "kappa/registry.hpp"
#include "kappa/report.hpp"

namespace {

using namespace kappa;

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

ParsedSpaceDoc doc_from_registry(const std::string& name) {
    const RegistryEntry& entry = find_example(name);
    QuadricSpace<Rational> v = entry.build();
    ParsedSpaceDoc doc;
    doc.field = FieldSpec::rationals();
    doc.d = v.d;
    doc.gram = v.basis;
    return doc;
}

ParsedSpaceDoc load_space(const std::string& path, const std::string& example) {
    if (!example.empty()) return doc_from_registry(example);
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw FormatError("invalid JSON in '" + path + "'");
    return read_space_document(doc);
}

template <class Fn>
int with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.is_q) return fn(FieldOf<Rational>{});
    return fn(FieldOf<Fp>(spec.p));
}

FieldSpec effective_field(const ParsedSpaceDoc& doc, const std::string& override_spec) {
    return override_spec.empty() ? doc.field : FieldSpec::parse(override_spec);
}

int cmd_compute(const std::string& input, const std::string& example, const std::string& field_override,
                std::uint64_t seed, bool as_json) {
    ParsedSpaceDoc doc = load_space(input, example);
    FieldSpec fs = effective_field(doc, field_override);
    return with_field(fs, [&](auto field) {
        auto space = realize(doc, field);
        Report report = make_report(space, field, seed);
        if (as_json)
            std::cout << report_to_json(report).dump(2) << "\n";
        else
            std::cout << report_to_text(report);
        return report.verdict.obstructed ? 2 : 0;
    });
}

int cmd_from_points(const std::string& input, long e_opt, const std::string& field_override,
                    std::uint64_t seed, bool as_json, const std::string& out_path) {
    ParsedPointsDoc pd = read_points_file(input);
    FieldSpec fs = field_override.empty() ? pd.field : FieldSpec::parse(field_override);
    const Index n = static_cast<Index>(pd.points.size());
    Index e = e_opt > 0 ? e_opt : n - 1 - pd.d;
    if (e < 1 || n != 1 + pd.d + e)
        throw LengthMismatch("need n = 1+d+e rows; got n = " + std::to_string(n) + ", d = " + std::to_string(pd.d));
    return with_field(fs, [&](auto field) {
        using S = decltype(field.from_int(0));
        PointConfiguration<S> pts = realize_points(pd, field);
        QuadricSpace<S> space;
        try {
            space = space_from_points(pts, e);
        } catch (const DegenerateFrame&) {
            throw DegenerateFrame("rows 0-" + std::to_string(pd.d) + " are affinely dependent");
        } catch (const DependentBasis&) {
            throw DependentBasis("residual rows " + std::to_string(pd.d + 1) + "-" + std::to_string(n - 1) +
                                 " give dependent quadrics");
        }
        nlohmann::json space_doc = space_to_json(space, fs);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw Error("cannot write '" + out_path + "'");
            out << space_doc.dump(2) << "\n";
        }
        Report report = make_report(space, field, seed);
        if (as_json) {
            nlohmann::json combined{{"space", std::move(space_doc)}, {"report", report_to_json(report)}};
            std::cout << combined.dump(2) << "\n";
        } else {
            std::cout << "space: " << space_doc.dump() << "\n" << report_to_text(report);
        }
        return report.verdict.obstructed ? 2 : 0;
    });
}

int cmd_table_dimension(long d, bool all, bool large, std::uint64_t seed, bool as_json) {
    std::vector<Index> ds;
    if (all) {
        for (Index x = 4; x <= (large ? 11 : 8); ++x) ds.push_back(x);
    } else {
        ds.push_back(d);
    }
    const auto& ref = smoothable_dimension_reference();
    bool all_pass = true;
    nlohmann::json rows = nlohmann::json::array();
    for (Index dd : ds) {
        long got = smoothable_locus_dimension_lower_bound(dd, seed);
        long want = ref.at(dd);
        bool pass = got == want;
        all_pass = all_pass && pass;
        if (as_json)
            rows.push_back({{"d", dd}, {"value", got}, {"expected", want}, {"pass", pass}});
        else
            std::cout << "d=" << dd << ": " << got << " (expected " << want << ") " << (pass ? "PASS" : "FAIL")
                      << "\n";
    }
    if (as_json) std::cout << nlohmann::json{{"schema_version", 1}, {"dimension", rows}}.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_table_deform153(const std::string& input, const std::string& example, const std::string& field_override,
                        bool as_json) {
    ParsedSpaceDoc doc = load_space(input, example);
    FieldSpec fs = effective_field(doc, field_override);
    return with_field(fs, [&](auto field) {
        auto space = realize(doc, field);
        Deform153 rows = deformation_table_153(kappa_vector(space));
        if (as_json) {
            std::cout << nlohmann::json{{"schema_version", 1},
                                        {"smoothable", rows.smoothable},
                                        {"deforms_to_143_plus1", rows.deforms_to_143_plus1},
                                        {"deforms_to_smoothable_143_plus1", rows.deforms_to_smoothable_143_plus1}}
                             .dump(2)
                      << "\n";
        } else {
            auto yn = [](bool b) { return b ? "yes" : "no"; };
            std::cout << "deforms to a union of 9 distinct points:   " << yn(rows.smoothable) << "\n";
            std::cout << "deforms to a (1,4,3)^{+1}-ideal:           " << yn(rows.deforms_to_143_plus1) << "\n";
            std::cout << "deforms to a smoothable (1,4,3)^{+1}-ideal: " << yn(rows.deforms_to_smoothable_143_plus1)
                      << "\n";
        }
        return 0;
    });
}

int cmd_sample(long d, long e, std::uint32_t p, long trials, std::uint64_t seed, bool as_json) {
    auto freq = sample_generic_kappa(d, e, p, trials, seed);
    std::vector<long> mode;
    long best = -1;
    for (const auto& [k, c] : freq)
        if (c > best) {
            best = c;
            mode = k;
        }
    auto fmt = [](const std::vector<long>& k) {
        std::string s = "(";
        for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
        return s + ")";
    };
    if (as_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [k, c] : freq) rows.push_back({{"kappa", k}, {"count", c}});
        std::cout << nlohmann::json{{"schema_version", 1}, {"d", d},         {"e", e},
                                    {"p", p},              {"trials", trials}, {"seed", seed},
                                    {"frequencies", rows}, {"mode", mode}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& [k, c] : freq) std::cout << fmt(k) << ": " << c << "\n";
        std::cout << "mode: " << fmt(mode) << " (" << best << "/" << trials << ")\n";
    }
    return 0;
}

int cmd_examples(const std::string& dump_name, const std::string& out_path) {
    if (dump_name.empty()) {
        for (const auto& entry : example_registry()) {
            std::string k = "(";
            for (std::size_t i = 0; i < entry.expected_kappa.size(); ++i)
                k += (i ? "," : "") + std::to_string(entry.expected_kappa[i]);
            k += ")";
            std::cout << entry.name << "  kappa=" << k << (entry.expected_obstructed ? "  obstructed" : "") << "\n    "
                      << entry.description << "\n";
        }
        return 0;
    }
    nlohmann::json doc = space_to_json(find_example(dump_name).build(), FieldSpec::rationals());
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << doc.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kappa-vector computations for spaces of quadratic forms"};
    app.require_subcommand(1);

    std::string input, example, field_spec, out_path, dump_name;
    std::uint64_t seed = kDefaultSeed;
    bool as_json = false;
    long d = 0, e = 0, trials = 200;
    std::uint32_t prime = 0;
    bool all = false, large = false;

    auto* compute = app.add_subcommand("compute", "Kappa report for a quadric space document");
    compute->add_option("input", input, "space document (JSON)");
    compute->add_option("--example", example, "use a built-in example instead of a file");
    compute->add_option("--field", field_spec, "override the document field (Q or fp:<prime>)");
    compute->add_option("--seed", seed, "seed for randomized advisories")->capture_default_str();
    compute->add_flag("--json", as_json, "machine-readable report");

    auto* from_points = app.add_subcommand("from-points", "Build a space from 1+d+e points and report on it");
    from_points->add_option("input", input, "points file (CSV or JSON)")->required();
    from_points->add_option("--e", e, "residual point count (default: inferred from the row count)");
    from_points->add_option("--field", field_spec, "field to compute over");
    from_points->add_option("--seed", seed, "seed for randomized advisories")->capture_default_str();
    from_points->add_option("--out", out_path, "write the constructed space document here");
    from_points->add_flag("--json", as_json, "machine-readable report");

    auto* table = app.add_subcommand("table", "Reproduce the dimension and deformation tables");
    table->require_subcommand(1);
    auto* dim = table->add_subcommand("dimension", "Dimension lower bound for the smoothable locus, e = 3");
    dim->add_option("--d", d, "embedding dimension (4-8; 9-11 with --large)");
    dim->add_flag("--all", all, "run every row");
    dim->add_flag("--large", large, "allow the slow d = 9,10,11 rows");
    dim->add_option("--seed", seed, "seed for the random configuration")->capture_default_str();
    dim->add_flag("--json", as_json, "machine-readable output");
    auto* deform = table->add_subcommand("deform153", "Deformation table for a (1,5,3) space");
    deform->add_option("--input", input, "space document (JSON)");
    deform->add_option("--example", example, "use a built-in example instead of a file");
    deform->add_option("--field", field_spec, "override the document field");
    deform->add_flag("--json", as_json, "machine-readable output");

    auto* sample = app.add_subcommand("sample", "Kappa frequencies of random spaces over F_p");
    sample->add_option("--d", d, "embedding dimension")->required();
    sample->add_option("--e", e, "space dimension")->required();
    sample->add_option("--fp", prime, "prime modulus (>= 5)")->required();
    sample->add_option("--trials", trials, "number of spaces to draw")->capture_default_str();
    sample->add_option("--seed", seed, "seed")->capture_default_str();
    sample->add_flag("--json", as_json, "machine-readable output");

    auto* examples = app.add_subcommand("examples", "List or dump the built-in example spaces");
    examples->add_option("--dump", dump_name, "print the named example as a space document");
    examples->add_option("--out", out_path, "write the dumped document here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            if (input.empty() && example.empty()) throw Error("compute needs an input file or --example");
            return cmd_compute(input, example, field_spec, seed, as_json);
        }
        if (from_points->parsed()) return cmd_from_points(input, e, field_spec, seed, as_json, out_path);
        if (table->parsed()) {
            if (dim->parsed()) {
                if (!all && (d < 4 || d > 11))
                    throw Error("dimension table rows exist for d = 4..11 (pass --d or --all)");
                if (!all && d > 8 && !large)
                    throw Error("d = " + std::to_string(d) + " is expensive; pass --large to run it");
                return cmd_table_dimension(d, all, large, seed, as_json);
            }
            if (input.empty() && example.empty()) throw Error("deform153 needs --input or --example");
            return cmd_table_deform153(input, example, field_spec, as_json);
        }
        if (sample->parsed()) {
            validate_modulus(prime);
            if (d < 1 || e < 1 || trials < 1) throw Error("sample needs positive --d, --e, --trials");
            return cmd_sample(d, e, prime, trials, seed, as_json);
        }
        if (examples->parsed()) return cmd_examples(dump_name, out_path);
    } catch (const kappa::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
