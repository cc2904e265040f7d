#include "hilbgen/json_io.hpp"

namespace hilbgen::io {

namespace {

json coeff_strings(const std::vector<mpz_class>& coeffs) {
    json arr = json::array();
    for (const mpz_class& c : coeffs) arr.push_back(c.get_str());
    return arr;
}

std::vector<mpz_class> coeffs_from(const json& arr) {
    std::vector<mpz_class> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.emplace_back(v.get<std::string>());
    return out;
}

json rational(const mpq_class& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

} // namespace

json to_json(const IntSeries& s) {
    return json{{"offset_num", s.offset().get_num().get_si()},
                {"offset_den", s.offset().get_den().get_si()},
                {"coeffs", coeff_strings(s.coeffs())}};
}

IntSeries int_series_from_json(const json& j) {
    mpq_class offset(j.at("offset_num").get<long>(), j.at("offset_den").get<long>());
    offset.canonicalize();
    return IntSeries(offset, coeffs_from(j.at("coeffs")));
}

json to_json(const LaurentPoly& p) {
    return json{{"lo", p.lo()}, {"coeffs", coeff_strings(p.coeffs())}};
}

LaurentPoly laurent_from_json(const json& j) {
    return LaurentPoly(j.at("lo").get<long>(), coeffs_from(j.at("coeffs")));
}

json to_json(const TwoVarSeries& s) {
    json arr = json::array();
    for (const LaurentPoly& p : s.qcoeffs()) arr.push_back(to_json(p));
    return json{{"qoffset", s.qoffset()}, {"qcoeffs", arr}};
}

TwoVarSeries two_var_from_json(const json& j) {
    std::vector<LaurentPoly> coeffs;
    for (const auto& v : j.at("qcoeffs")) coeffs.push_back(laurent_from_json(v));
    return TwoVarSeries(j.at("qoffset").get<long>(), std::move(coeffs));
}

json to_json(const EtaProduct& p) {
    json exps = json::object();
    for (const auto& [m, a] : p.exponents())
        if (a != 0) exps[std::to_string(m)] = a;
    return json{{"level", p.level()}, {"exponents", exps}};
}

EtaProduct eta_product_from_json(const json& j) {
    std::map<long, long> exps;
    for (const auto& [key, value] : j.at("exponents").items())
        exps[std::stol(key)] = value.get<long>();
    return EtaProduct(j.at("level").get<long>(), exps);
}

json to_json(const CuspReport& r) {
    json cusps = json::array();
    for (const CuspValue& v : r.cusps)
        cusps.push_back(json{{"c", v.c},
                             {"value", rational(v.value)},
                             {"sign", v.sign}});
    return json{{"cusps", cusps},
                {"classification", to_string(r.classification)}};
}

json to_json(const GenusExpansion& g) {
    json out = json::object();
    for (const auto& [h, n] : g.coeffs) out[std::to_string(h)] = n.get_str();
    return out;
}

json to_json(const SingularityType& s) {
    json out = json::object();
    for (const auto& [tag, n] : s.counts()) out[to_string(tag)] = n;
    return out;
}

json to_json(const RowReport& r) {
    json checks = json::array();
    for (const RowCheck& c : r.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return json{{"row_id", r.row_id}, {"checks", checks}, {"pass", r.pass}};
}

json to_json(const BpsTable& t) {
    json normalized = json::array();
    json raw = json::array();
    for (long d = 0; d <= t.dmax; ++d) {
        json nrow = json::array(), rrow = json::array();
        for (long h = 0; h <= t.hmax; ++h) {
            nrow.push_back(t.normalized(d, h).get_str());
            rrow.push_back(t.raw(d, h).get_str());
        }
        normalized.push_back(std::move(nrow));
        raw.push_back(std::move(rrow));
    }
    return json{{"dmax", t.dmax},
                {"hmax", t.hmax},
                {"normalization", BpsTable::normalization},
                {"normalized", normalized},
                {"raw", raw}};
}

json to_json(const HyperellipticTable& t) {
    json rows = json::array();
    for (long d = 0; d <= t.dmax; ++d) {
        json row = json::array();
        for (long g = 1; g <= t.gmax(d); ++g) row.push_back(t.count(d, g).get_str());
        rows.push_back(std::move(row));
    }
    return json{{"dmax", t.dmax}, {"gmin", 1}, {"counts", rows}};
}

json to_json(const BopyReport& r) {
    json checks = json::array();
    for (const BopyCheck& c : r.checks)
        checks.push_back(json{{"d", c.d},
                              {"genus0", c.lhs.get_str()},
                              {"weighted_sum", c.rhs.get_str()},
                              {"pass", c.pass}});
    return json{{"dmax", r.dmax}, {"checks", checks}, {"pass", r.pass}};
}

json to_json(const LocalFactor& f) {
    json out{{"delta", to_string(f.delta)},
             {"stabilizer_order", f.stabilizer},
             {"coeffs", coeff_strings(f.series.coeffs())},
             {"derived_from_rows", f.derived_from_rows}};
    if (f.template_params) {
        out["template"] = json{{"E", f.template_params->E},
                               {"F", f.template_params->F},
                               {"V", f.template_params->V}};
    } else {
        out["template"] = nullptr;
    }
    return out;
}

json to_json(const MultiplierMeasurement& m, const GammaZeroElement& L) {
    return json{{"a", L.a},
                {"b", L.b},
                {"c", L.c},
                {"d", L.d},
                {"value_re", m.value.real()},
                {"value_im", m.value.imag()},
                {"residual", m.residual},
                {"terms_used", m.terms_used},
                {"truncation_bound", m.truncation_bound}};
}

json catalog_to_json() {
    json rows = json::array();
    for (const ActionRecord& rec : catalog()) {
        rows.push_back(json{{"row_id", rec.row_id},
                            {"group", to_string(rec.group)},
                            {"order", rec.order},
                            {"singularities", to_json(rec.sing_type)},
                            {"singularity_string", rec.sing_type.to_string()},
                            {"euler_quotient", rec.euler_quotient},
                            {"weight", rational(rec.weight())},
                            {"eta_product", to_json(rec.reference_product)},
                            {"eta_string", rec.reference_product.to_string()}});
    }
    return json{{"schema_version", 1}, {"rows", rows}};
}

} // namespace hilbgen::io
