#include "hilbgen/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "hilbgen/reference_data.hpp"

namespace hilbgen {

const char* to_string(GroupTag g) {
    switch (g) {
        case GroupTag::trivial: return "trivial";
        case GroupTag::Z2: return "Z2";
        case GroupTag::Z3: return "Z3";
        case GroupTag::Z4: return "Z4";
        case GroupTag::Z6: return "Z6";
        case GroupTag::Q: return "Q";
        case GroupTag::D: return "D";
        case GroupTag::T: return "T";
    }
    return "?";
}

GroupTag parse_group_tag(const std::string& text) {
    for (GroupTag g : {GroupTag::trivial, GroupTag::Z2, GroupTag::Z3, GroupTag::Z4,
                       GroupTag::Z6, GroupTag::Q, GroupTag::D, GroupTag::T})
        if (text == to_string(g)) return g;
    throw ParseError("unknown group tag '" + text + "'");
}

long group_order(GroupTag g) {
    switch (g) {
        case GroupTag::trivial: return 1;
        case GroupTag::Z2: return 2;
        case GroupTag::Z3: return 3;
        case GroupTag::Z4: return 4;
        case GroupTag::Z6: return 6;
        case GroupTag::Q: return 8;
        case GroupTag::D: return 12;
        case GroupTag::T: return 24;
    }
    return 0;
}

SingularityType::SingularityType(const std::map<AdeTag, long>& counts) {
    for (const auto& [tag, n] : counts) {
        if (n < 0) throw ParseError("negative singularity count");
        if (n > 0) counts_[tag] = n;
    }
}

long SingularityType::count(AdeTag tag) const {
    auto it = counts_.find(tag);
    return it == counts_.end() ? 0 : it->second;
}

long SingularityType::r() const {
    long total = 0;
    for (const auto& [tag, n] : counts_) total += n;
    return total;
}

mpq_class SingularityType::smooth_locus_euler() const {
    mpq_class total = 0;
    for (const auto& [tag, n] : counts_)
        total -= mpq_class(n, stabilizer_order(tag));
    total.canonicalize();
    return total;
}

long SingularityType::exceptional_euler() const {
    long total = 0;
    for (const auto& [tag, n] : counts_)
        total += n * exceptional_euler_contribution(tag);
    return total;
}

mpq_class SingularityType::resolution_euler() const {
    return smooth_locus_euler() + exceptional_euler();
}

std::string SingularityType::to_string() const {
    if (counts_.empty()) return "-";
    // Largest type first, matching the usual presentation.
    std::ostringstream os;
    bool first = true;
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
        if (!first) os << " + ";
        if (it->second != 1) os << it->second;
        os << hilbgen::to_string(it->first);
        first = false;
    }
    return os.str();
}

bool operator<(const SingularityType& a, const SingularityType& b) {
    for (AdeTag tag : kAdeTags) {
        long ca = a.count(tag), cb = b.count(tag);
        if (ca != cb) return ca < cb;
    }
    return false;
}

const std::vector<ActionRecord>& catalog() {
    static const std::vector<ActionRecord> rows = [] {
        std::vector<ActionRecord> out;
        for (const CatalogRowData& data : catalog_row_data()) {
            ActionRecord rec;
            rec.row_id = data.row_id;
            rec.group = data.group;
            rec.order = data.order;
            rec.sing_type = SingularityType(data.singularities);
            rec.euler_quotient = data.euler_quotient;
            rec.reference_product = EtaProduct(data.order, data.eta_exponents);
            out.push_back(std::move(rec));
        }
        return out;
    }();
    return rows;
}

const ActionRecord& catalog_row(int row_id) {
    for (const ActionRecord& rec : catalog())
        if (rec.row_id == row_id) return rec;
    throw ParseError("no catalog row " + std::to_string(row_id));
}

IntSeries assemble_z(const ActionRecord& row, const LocalSet& locals,
                     std::size_t truncation) {
    if (row.group == GroupTag::trivial) return IntSeries::one(truncation);

    long k = row.order;
    long exponent = row.sing_type.r() - row.euler_quotient;
    IntSeries acc = euler_factor(k, truncation).pow(exponent);

    for (const auto& [tag, count] : row.sing_type.counts()) {
        auto it = locals.find(tag);
        if (it == locals.end())
            throw MissingLocalFactor(std::string("no local factor for ") +
                                     to_string(tag));
        long ki = stabilizer_order(tag);
        if (k % ki != 0)
            throw DivisibilityViolation("group order " + std::to_string(k) +
                                        " not divisible by stabilizer order " +
                                        std::to_string(ki));
        long m = k / ki;
        std::size_t needed = (truncation + static_cast<std::size_t>(m) - 1) /
                             static_cast<std::size_t>(m);
        if (it->second.series.truncation_order() < needed)
            throw InconsistentDerivation(
                std::string("local factor ") + to_string(tag) + " has window " +
                std::to_string(it->second.series.truncation_order()) +
                ", need " + std::to_string(needed));
        IntSeries sub =
            it->second.series.substitute_q_power(m).truncated(truncation);
        acc = acc * sub.pow(count);
    }
    return acc;
}

long TranslationExtension::effective_level() const {
    return catalog_row(base_row).order * translation_order;
}

IntSeries apply_translation(const IntSeries& z, const TranslationExtension& t) {
    return z.substitute_q_power(t.translation_order);
}

const std::set<AdeTag>& allowed_stabilizers(GroupTag g) {
    return allowed_stabilizer_table().at(g);
}

std::vector<SingularityType> solve_singularity_types(GroupTag g,
                                                     const std::set<AdeTag>& allowed) {
    const std::set<AdeTag>& legal = allowed_stabilizers(g);
    std::vector<AdeTag> tags;
    for (AdeTag tag : kAdeTags)
        if (allowed.count(tag) && legal.count(tag)) tags.push_back(tag);

    std::vector<SingularityType> solutions;
    std::map<AdeTag, long> counts;
    // Every per-point contribution c - 1/k is >= 3/2, so counts are <= 16.
    auto dfs = [&](auto&& self, std::size_t idx, mpq_class remaining) -> void {
        if (idx == tags.size()) {
            if (remaining == 0) solutions.push_back(SingularityType(counts));
            return;
        }
        AdeTag tag = tags[idx];
        mpq_class contribution =
            mpq_class(exceptional_euler_contribution(tag)) -
            mpq_class(1, stabilizer_order(tag));
        for (long n = 0;; ++n) {
            mpq_class used = contribution * n;
            if (used > remaining) break;
            if (n > 0) counts[tag] = n;
            self(self, idx + 1, remaining - used);
            counts.erase(tag);
        }
    };
    dfs(dfs, 0, mpq_class(24));
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

std::vector<SingularityType> solve_singularity_types(GroupTag g) {
    return solve_singularity_types(g, allowed_stabilizers(g));
}

void RowReport::add(std::string name, bool ok, std::string detail) {
    pass = pass && ok;
    checks.push_back(RowCheck{std::move(name), ok, std::move(detail)});
}

RowReport verify_row(const ActionRecord& row, const LocalSet& locals,
                     std::size_t truncation) {
    RowReport report;
    report.row_id = row.row_id;

    IntSeries z = assemble_z(row, locals, truncation);
    IntSeries ref = row.reference_product.expansion(truncation);
    IntSeries product = z * ref;
    bool inverts = product == IntSeries::one(truncation);
    report.add("assembly_inverts_reference", inverts,
               "compared " + std::to_string(IntSeries::overlap_length(
                                 product, IntSeries::one(truncation))) +
                   " coefficients");

    CuspReport cusp = koehler_check(row.reference_product);
    report.add("holomorphic_at_cusps", cusp.holomorphic(),
               to_string(cusp.classification));
    report.add("non_cuspidal_with_exact_zero",
               cusp.holomorphic() && !cusp.cuspidal() && cusp.has_exact_zero());

    report.add("weight_is_half_euler",
               row.reference_product.weight() == row.weight(),
               row.reference_product.weight().get_str());
    report.add("level_is_group_order", row.reference_product.level() == row.order);
    report.add("order_at_infinity_zero",
               row.reference_product.order_at_infinity() == 0);
    report.add("leading_coefficient_one",
               ref.truncation_order() > 0 && ref.coeff(0) == 1);

    mpq_class recomputed = row.sing_type.smooth_locus_euler() + row.sing_type.r();
    report.add("euler_quotient_consistent", recomputed == row.euler_quotient,
               recomputed.get_str());
    if (row.group == GroupTag::trivial) {
        report.add("resolution_euler_24", row.sing_type.r() == 0, "n/a for trivial row");
    } else {
        report.add("resolution_euler_24", row.sing_type.resolution_euler() == 24,
                   row.sing_type.resolution_euler().get_str());
    }
    return report;
}

} // namespace hilbgen
