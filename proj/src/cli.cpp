#include "hilbgen/cli.hpp"

#include <ostream>
#include <sstream>

#include "hilbgen/bps_tables.hpp"
#include "hilbgen/json_io.hpp"
#include "hilbgen/modular_numeric.hpp"
#include "hilbgen/reference_data.hpp"

namespace hilbgen::cli {

using io::json;

namespace {

constexpr int kSchemaVersion = 1;

// Shared evaluation points for the transformation-law measurements.
const std::vector<UpperHalfPoint>& measurement_points() {
    static const std::vector<UpperHalfPoint> points = {
        UpperHalfPoint(0.3, 1.1), UpperHalfPoint(-0.2, 1.7)};
    return points;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

std::string weight_str(const mpq_class& w) { return w.get_str(); }

std::string z_prefix_string(const IntSeries& z, std::size_t n) {
    std::ostringstream os;
    for (std::size_t i = 0; i < n && i < z.truncation_order(); ++i) {
        if (i > 0) os << " ";
        os << z.coeff(i).get_str();
    }
    return os.str();
}

} // namespace

OutputFormat parse_format(const std::string& text) {
    if (text == "text") return OutputFormat::text;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw ParseError("unknown output format '" + text + "'");
}

void RunConfig::validate() const {
    if (truncation_order < 1) throw ParseError("truncation order must be >= 1");
    if (!(tolerance > 0.0)) throw ParseError("tolerance must be positive");
}

int render_error(const RunConfig& cfg, const Error& e, std::ostream& out) {
    if (cfg.format == OutputFormat::text) {
        out << "error: " << e.kind() << ": " << e.what() << "\n";
    } else {
        emit(out, json{{"schema_version", kSchemaVersion},
                       {"error", {{"type", e.kind()}, {"message", e.what()}}}});
    }
    return 2;
}

int cmd_table1(const RunConfig& cfg, std::optional<int> row_filter,
               std::ostream& out) {
    cfg.validate();
    LocalSet locals = standard_locals(cfg.truncation_order);
    std::size_t coeff_count = std::min<std::size_t>(12, cfg.truncation_order);

    bool all_pass = true;
    json rows = json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "row,group,weight,level,singularities,eta_product,koehler,pass,z_coeffs\n";

    for (const ActionRecord& rec : catalog()) {
        if (row_filter && rec.row_id != *row_filter) continue;
        RowReport report = verify_row(rec, locals, cfg.truncation_order);
        all_pass = all_pass && report.pass;
        IntSeries z = assemble_z(rec, locals, cfg.truncation_order);
        CuspReport cusp = koehler_check(rec.reference_product);

        json row = json{{"row_id", rec.row_id},
                        {"group", to_string(rec.group)},
                        {"order", rec.order},
                        {"singularities", io::to_json(rec.sing_type)},
                        {"singularity_string", rec.sing_type.to_string()},
                        {"eta_string", rec.reference_product.to_string()},
                        {"eta_product", io::to_json(rec.reference_product)},
                        {"weight", weight_str(rec.reference_product.weight())},
                        {"level", rec.reference_product.level()},
                        {"koehler", io::to_json(cusp)},
                        {"z_coeffs", json::array()},
                        {"verify", io::to_json(report)}};
        for (std::size_t i = 0; i < coeff_count; ++i)
            row["z_coeffs"].push_back(z.coeff(i).get_str());
        rows.push_back(std::move(row));

        text << "row " << rec.row_id << "  G=" << to_string(rec.group)
             << "  |G|=" << rec.order << "  " << rec.sing_type.to_string() << "\n"
             << "  Z^-1 = " << rec.reference_product.to_string()
             << "   weight " << weight_str(rec.reference_product.weight())
             << "   " << to_string(cusp.classification) << "\n"
             << "  Z = " << z_prefix_string(z, coeff_count) << " ...\n"
             << "  checks: " << (report.pass ? "PASS" : "FAIL");
        if (!report.pass) {
            for (const RowCheck& c : report.checks)
                if (!c.pass) text << "  [" << c.name << "]";
        }
        text << "\n";

        csv << rec.row_id << "," << to_string(rec.group) << ","
            << weight_str(rec.reference_product.weight()) << ","
            << rec.reference_product.level() << "," << rec.sing_type.to_string()
            << "," << rec.reference_product.to_string() << ","
            << to_string(cusp.classification) << ","
            << (report.pass ? "1" : "0") << "," << z_prefix_string(z, coeff_count)
            << "\n";
    }

    switch (cfg.format) {
        case OutputFormat::json:
            emit(out, json{{"schema_version", kSchemaVersion},
                           {"rows", rows},
                           {"pass", all_pass}});
            break;
        case OutputFormat::csv: out << csv.str(); break;
        case OutputFormat::text:
            out << text.str() << (all_pass ? "all rows PASS" : "FAIL") << "\n";
            break;
    }
    return all_pass ? 0 : 1;
}

int cmd_table2(const RunConfig& cfg, long dmax, long hmax, bool check_reference,
               std::ostream& out) {
    cfg.validate();
    if (dmax < 0) throw ParseError("dmax must be >= 0");
    if (hmax < 0) hmax = dmax + 1;
    BpsTable table = bps_table(dmax, hmax);

    bool pass = true;
    json mismatches = json::array();
    if (check_reference) {
        const auto& ref = reference_counts_table();
        if (dmax < 7 || hmax < 4)
            throw ParseError("reference check needs dmax >= 7 and hmax >= 4");
        for (long h = 0; h <= 4; ++h) {
            for (long d = 0; d <= 7; ++d) {
                mpz_class expected(static_cast<long>(ref[static_cast<std::size_t>(h)]
                                                        [static_cast<std::size_t>(d)]));
                if (table.normalized(d, h) != expected) {
                    pass = false;
                    mismatches.push_back(
                        json{{"d", d},
                             {"h", h},
                             {"expected", expected.get_str()},
                             {"computed", table.normalized(d, h).get_str()}});
                }
            }
        }
    }

    switch (cfg.format) {
        case OutputFormat::json: {
            json doc{{"schema_version", kSchemaVersion}, {"table", io::to_json(table)}};
            if (check_reference) {
                doc["reference_check"] =
                    json{{"pass", pass}, {"mismatches", mismatches}};
            }
            emit(out, doc);
            break;
        }
        case OutputFormat::csv: {
            out << "d";
            for (long h = 0; h <= hmax; ++h) out << ",h=" << h;
            out << "\n";
            for (long d = 0; d <= dmax; ++d) {
                out << d;
                for (long h = 0; h <= hmax; ++h)
                    out << "," << table.normalized(d, h).get_str();
                out << "\n";
            }
            if (check_reference)
                out << (pass ? "# reference check PASS" : "# reference check FAIL")
                    << "\n";
            break;
        }
        case OutputFormat::text: {
            for (long d = 0; d <= dmax; ++d) {
                out << "d=" << d << ":";
                for (long h = 0; h <= hmax; ++h)
                    out << " " << table.normalized(d, h).get_str();
                out << "\n";
            }
            if (check_reference)
                out << (pass ? "reference check PASS" : "reference check FAIL")
                    << "\n";
            break;
        }
    }
    return pass ? 0 : 1;
}

int cmd_classify(const RunConfig& cfg, GroupTag group, std::ostream& out) {
    cfg.validate();
    std::vector<SingularityType> solutions = solve_singularity_types(group);

    json sols = json::array();
    for (const SingularityType& s : solutions) {
        std::optional<int> realized;
        for (const ActionRecord& rec : catalog())
            if (rec.group == group && rec.sing_type == s) realized = rec.row_id;
        json entry{{"counts", io::to_json(s)},
                   {"singularity_string", s.to_string()},
                   {"realized_row", realized ? json(*realized) : json(nullptr)}};
        sols.push_back(std::move(entry));
    }

    switch (cfg.format) {
        case OutputFormat::json:
            emit(out, json{{"schema_version", kSchemaVersion},
                           {"group", to_string(group)},
                           {"solutions", sols}});
            break;
        case OutputFormat::csv:
            out << "group,singularities,realized_row\n";
            for (const auto& s : sols)
                out << to_string(group) << ","
                    << s["singularity_string"].get<std::string>() << ","
                    << (s["realized_row"].is_null()
                            ? "-"
                            : std::to_string(s["realized_row"].get<int>()))
                    << "\n";
            break;
        case OutputFormat::text:
            out << "group " << to_string(group) << ": " << sols.size()
                << " singularity type(s)\n";
            for (const auto& s : sols) {
                out << "  " << s["singularity_string"].get<std::string>();
                if (!s["realized_row"].is_null())
                    out << "   [row " << s["realized_row"].get<int>() << "]";
                out << "\n";
            }
            break;
    }
    return 0;
}

int cmd_derive_local(const RunConfig& cfg, long search_bound, std::ostream& out) {
    cfg.validate();
    LocalSet a_types;
    for (AdeTag tag : {AdeTag::A1, AdeTag::A2, AdeTag::A3, AdeTag::A5})
        a_types.emplace(tag, local_a_type(tag, cfg.truncation_order));

    LocalFactor d4 = derive_local_from_row(AdeTag::D4, 6, a_types, cfg.truncation_order);
    LocalFactor d4_alt =
        derive_local_from_row(AdeTag::D4, 7, a_types, cfg.truncation_order);
    bool cross_check = d4.series == d4_alt.series &&
                       IntSeries::overlap_length(d4.series, d4_alt.series) ==
                           cfg.truncation_order;
    d4.derived_from_rows = {6, 7};

    LocalSet known = a_types;
    known.emplace(AdeTag::D4, d4);
    LocalFactor d5 = derive_local_from_row(AdeTag::D5, 9, known, cfg.truncation_order);
    LocalFactor e6 = derive_local_from_row(AdeTag::E6, 10, known, cfg.truncation_order);

    json factors = json::array();
    json all_matches = json::object();
    for (LocalFactor* f : {&d4, &d5, &e6}) {
        f->template_params = match_template(*f, search_bound);
        json entry = io::to_json(*f);
        json matches = json::array();
        for (const EtaTemplateParams& p : match_template_all(*f, search_bound))
            matches.push_back(json{{"E", p.E}, {"F", p.F}, {"V", p.V}});
        entry["template_matches"] = matches;
        factors.push_back(std::move(entry));
    }

    json doc{{"schema_version", kSchemaVersion},
             {"truncation_order", cfg.truncation_order},
             {"search_bound", search_bound},
             {"factors", factors},
             {"d4_cross_check_rows", json::array({6, 7})},
             {"d4_cross_check_pass", cross_check}};

    if (cfg.format == OutputFormat::text) {
        for (const auto& f : doc["factors"]) {
            out << f["delta"].get<std::string>() << ": ";
            const auto& coeffs = f["coeffs"];
            for (std::size_t i = 0; i < std::min<std::size_t>(coeffs.size(), 10); ++i)
                out << coeffs[i].get<std::string>() << " ";
            out << "...";
            if (!f["template"].is_null())
                out << "  template (E,F,V)=(" << f["template"]["E"].get<long>() << ","
                    << f["template"]["F"].get<long>() << ","
                    << f["template"]["V"].get<long>() << ")";
            out << "\n";
        }
        out << "d4 cross-derivation (rows 6 vs 7): "
            << (cross_check ? "PASS" : "FAIL") << "\n";
    } else {
        emit(out, doc);
    }
    return cross_check ? 0 : 1;
}

int cmd_modular_check(const RunConfig& cfg, std::optional<int> row_filter,
                      std::size_t samples, long entry_bound, long terms,
                      std::ostream& out) {
    cfg.validate();
    bool all_pass = true;
    json rows = json::array();
    std::ostringstream text;

    for (const ActionRecord& rec : catalog()) {
        if (row_filter && rec.row_id != *row_filter) continue;
        long level = rec.order;
        long bound = std::max(entry_bound, level);
        std::vector<GammaZeroElement> sample = random_gamma0(
            level, bound, samples, cfg.seed + static_cast<unsigned long>(rec.row_id));

        double max_residual = 0.0;
        double max_unimodular_error = 0.0;
        json matrices = json::array();
        for (const GammaZeroElement& L : sample) {
            MultiplierMeasurement m = measure_multiplier(
                rec.reference_product, L, measurement_points(), terms);
            max_residual = std::max(max_residual, m.residual);
            max_unimodular_error =
                std::max(max_unimodular_error, std::abs(std::abs(m.value) - 1.0));
            matrices.push_back(io::to_json(m, L));
        }

        // Wrong-weight control: needs c != 0 so the automorphy factor varies
        // across the test points.
        GammaZeroElement control{1, 0, level, 1};
        for (const GammaZeroElement& L : sample)
            if (L.c != 0) { control = L; break; }
        mpq_class wrong = rec.reference_product.weight() + mpq_class(1, 2);
        MultiplierMeasurement control_m = measure_multiplier_with_weight(
            rec.reference_product, control, measurement_points(), terms, wrong);
        bool control_ok = control_m.residual > 1e-3;

        bool pass = max_residual < cfg.tolerance &&
                    max_unimodular_error < cfg.tolerance && control_ok;
        all_pass = all_pass && pass;

        rows.push_back(json{{"row_id", rec.row_id},
                            {"level", level},
                            {"weight", weight_str(rec.reference_product.weight())},
                            {"entry_bound", bound},
                            {"matrices", matrices},
                            {"max_residual", max_residual},
                            {"max_unimodular_error", max_unimodular_error},
                            {"wrong_weight_residual", control_m.residual},
                            {"pass", pass}});
        text << "row " << rec.row_id << "  level " << level << "  max residual "
             << max_residual << "  |v|-1 " << max_unimodular_error
             << "  wrong-weight residual " << control_m.residual << "  "
             << (pass ? "PASS" : "FAIL") << "\n";
    }

    if (cfg.format == OutputFormat::text) {
        out << text.str();
    } else {
        emit(out, json{{"schema_version", kSchemaVersion},
                       {"rows", rows},
                       {"pass", all_pass}});
    }
    return all_pass ? 0 : 1;
}

int cmd_hyperelliptic(const RunConfig& cfg, long dmax, bool verify,
                      std::ostream& out) {
    cfg.validate();
    HyperellipticTable table = hyperelliptic_table(dmax);
    BopyReport report;
    if (verify) report = verify_hilb_bopy(dmax);
    bool pass = !verify || report.pass;

    switch (cfg.format) {
        case OutputFormat::json: {
            json doc{{"schema_version", kSchemaVersion},
                     {"table", io::to_json(table)}};
            if (verify) doc["genus0_consistency"] = io::to_json(report);
            emit(out, doc);
            break;
        }
        case OutputFormat::csv: {
            out << "d";
            for (long g = 1; g <= dmax + 1; ++g) out << ",g=" << g;
            out << "\n";
            for (long d = 0; d <= dmax; ++d) {
                out << d;
                for (long g = 1; g <= dmax + 1; ++g)
                    out << "," << table.count(d, g).get_str();
                out << "\n";
            }
            if (verify)
                out << (pass ? "# genus0 consistency PASS"
                             : "# genus0 consistency FAIL")
                    << "\n";
            break;
        }
        case OutputFormat::text: {
            for (long d = 0; d <= dmax; ++d) {
                out << "d=" << d << ":";
                for (long g = 1; g <= d + 1; ++g)
                    out << " " << table.count(d, g).get_str();
                out << "\n";
            }
            if (verify)
                out << (pass ? "genus0 consistency PASS" : "genus0 consistency FAIL")
                    << "\n";
            break;
        }
    }
    return pass ? 0 : 1;
}

int cmd_expand(const RunConfig& cfg, const std::string& eta_text, long level,
               bool invert, long qpower, std::ostream& out) {
    cfg.validate();
    EtaProduct product = EtaProduct::parse(eta_text, level);
    IntSeries series = product.expansion(cfg.truncation_order);
    if (invert) series = series.inverse();
    if (qpower > 1) series = series.substitute_q_power(qpower);

    switch (cfg.format) {
        case OutputFormat::json:
            emit(out, json{{"schema_version", kSchemaVersion},
                           {"eta_string", product.to_string()},
                           {"level", product.level()},
                           {"weight", weight_str(product.weight())},
                           {"inverted", invert},
                           {"q_power", qpower},
                           {"series", io::to_json(series)}});
            break;
        case OutputFormat::csv: {
            out << "exponent,coefficient\n";
            for (std::size_t i = 0; i < series.truncation_order(); ++i) {
                mpq_class e = series.offset() + static_cast<long>(i);
                out << e.get_str() << "," << series.coeff(i).get_str() << "\n";
            }
            break;
        }
        case OutputFormat::text:
            out << product.to_string() << (invert ? " inverted" : "") << "\n"
                << series.to_string(12) << "\n";
            break;
    }
    return 0;
}

} // namespace hilbgen::cli
