#include "hilbgen/local_factors.hpp"

#include <algorithm>

#include "hilbgen/catalog.hpp"
#include "hilbgen/eta_product.hpp"

namespace hilbgen {

long stabilizer_order(AdeTag tag) {
    switch (tag) {
        case AdeTag::A1: return 2;
        case AdeTag::A2: return 3;
        case AdeTag::A3: return 4;
        case AdeTag::A5: return 6;
        case AdeTag::D4: return 8;
        case AdeTag::D5: return 12;
        case AdeTag::E6: return 24;
    }
    return 0;
}

long exceptional_euler_contribution(AdeTag tag) {
    switch (tag) {
        case AdeTag::A1: return 2;
        case AdeTag::A2: return 3;
        case AdeTag::A3: return 4;
        case AdeTag::A5: return 6;
        case AdeTag::D4: return 5;
        case AdeTag::D5: return 6;
        case AdeTag::E6: return 7;
    }
    return 0;
}

const char* to_string(AdeTag tag) {
    switch (tag) {
        case AdeTag::A1: return "A1";
        case AdeTag::A2: return "A2";
        case AdeTag::A3: return "A3";
        case AdeTag::A5: return "A5";
        case AdeTag::D4: return "D4";
        case AdeTag::D5: return "D5";
        case AdeTag::E6: return "E6";
    }
    return "?";
}

AdeTag parse_ade_tag(const std::string& text) {
    for (AdeTag tag : kAdeTags)
        if (text == to_string(tag)) return tag;
    throw ParseError("unknown ADE tag '" + text + "'");
}

LocalFactor local_a_type(AdeTag tag, std::size_t truncation) {
    if (tag != AdeTag::A1 && tag != AdeTag::A2 && tag != AdeTag::A3 &&
        tag != AdeTag::A5)
        throw MissingLocalFactor(std::string(to_string(tag)) +
                                 " is not an A-type tag");
    LocalFactor f;
    f.delta = tag;
    f.stabilizer = stabilizer_order(tag);
    f.series = euler_factor(1, truncation).inverse();
    return f;
}

LocalFactor derive_local_from_row(AdeTag delta, int row_id, const LocalSet& known,
                                  std::size_t truncation) {
    const ActionRecord& row = catalog_row(row_id);
    long multiplicity = row.sing_type.count(delta);
    if (multiplicity < 1)
        throw InconsistentDerivation(std::string("row ") + std::to_string(row_id) +
                                     " has no " + to_string(delta) + " point");
    long k = row.order;
    if (k != stabilizer_order(delta))
        throw InconsistentDerivation(
            std::string("unknown factor ") + to_string(delta) +
            " does not appear at unit scale in row " + std::to_string(row_id));

    // Solve  Z_row = prod(1-q^{kn})^{r-e} * Zhat_delta^mult * (known factors)
    // for Zhat_delta.
    IntSeries acc = row.reference_product.expansion(truncation).inverse();
    acc = acc * euler_factor(k, truncation)
                    .pow(row.euler_quotient - row.sing_type.r());
    for (const auto& [tag, count] : row.sing_type.counts()) {
        if (tag == delta) continue;
        auto it = known.find(tag);
        if (it == known.end())
            throw MissingLocalFactor(std::string("derivation of ") +
                                     to_string(delta) + " from row " +
                                     std::to_string(row_id) + " needs " +
                                     to_string(tag));
        long m = k / stabilizer_order(tag);
        std::size_t needed = (truncation + static_cast<std::size_t>(m) - 1) /
                             static_cast<std::size_t>(m);
        if (it->second.series.truncation_order() < needed)
            throw InconsistentDerivation(std::string("local factor ") +
                                         to_string(tag) + " window too short");
        IntSeries sub =
            it->second.series.substitute_q_power(m).truncated(truncation);
        acc = acc * sub.pow(-count);
    }

    LocalFactor out;
    out.delta = delta;
    out.stabilizer = stabilizer_order(delta);
    out.series = acc.nth_root(multiplicity);
    out.derived_from_rows = {row_id};
    if (out.series.truncation_order() == 0 || out.series.coeff(0) != 1 ||
        out.series.offset() != 0)
        throw InconsistentDerivation(std::string("derived ") + to_string(delta) +
                                     " factor is not normalized");
    return out;
}

LocalSet standard_locals(std::size_t truncation) {
    LocalSet locals;
    for (AdeTag tag : {AdeTag::A1, AdeTag::A2, AdeTag::A3, AdeTag::A5})
        locals.emplace(tag, local_a_type(tag, truncation));
    locals.emplace(AdeTag::D4,
                   derive_local_from_row(AdeTag::D4, 6, locals, truncation));
    locals.emplace(AdeTag::D5,
                   derive_local_from_row(AdeTag::D5, 9, locals, truncation));
    locals.emplace(AdeTag::E6,
                   derive_local_from_row(AdeTag::E6, 10, locals, truncation));
    return locals;
}

IntSeries template_expansion(const EtaTemplateParams& params,
                             std::size_t truncation) {
    IntSeries acc = euler_factor(2, truncation).pow(2) *
                    euler_factor(4 * params.E, truncation) *
                    euler_factor(1, truncation).pow(-1) *
                    euler_factor(2 * params.E, truncation).pow(-1) *
                    euler_factor(2 * params.F, truncation).pow(-1) *
                    euler_factor(2 * params.V, truncation).pow(-1);
    // Quotient order at infinity plus the q^{1/24} normalization.
    mpq_class offset(4 + 2 * (params.E - params.F - params.V), 24);
    offset.canonicalize();
    return acc.with_offset(offset);
}

std::vector<EtaTemplateParams> match_template_all(const LocalFactor& factor,
                                                  long search_bound) {
    std::vector<EtaTemplateParams> matches;
    std::size_t window = factor.series.truncation_order();
    std::size_t coarse = std::min<std::size_t>(window, 24);
    IntSeries target_coarse = factor.series.truncated(coarse);
    for (long E = 1; E <= search_bound; ++E) {
        for (long F = 1; F <= search_bound; ++F) {
            for (long V = 1; V <= search_bound; ++V) {
                EtaTemplateParams p{E, F, V};
                if (2 * (E - F - V) + 4 != 0) continue; // offset must cancel
                if (template_expansion(p, coarse) != target_coarse) continue;
                if (template_expansion(p, window) == factor.series)
                    matches.push_back(p);
            }
        }
    }
    return matches;
}

std::optional<EtaTemplateParams> match_template(const LocalFactor& factor,
                                                long search_bound) {
    std::size_t window = factor.series.truncation_order();
    std::size_t coarse = std::min<std::size_t>(window, 24);
    IntSeries target_coarse = factor.series.truncated(coarse);
    for (long E = 1; E <= search_bound; ++E)
        for (long F = 1; F <= search_bound; ++F)
            for (long V = 1; V <= search_bound; ++V) {
                EtaTemplateParams p{E, F, V};
                if (2 * (E - F - V) + 4 != 0) continue;
                if (template_expansion(p, coarse) != target_coarse) continue;
                if (template_expansion(p, window) == factor.series) return p;
            }
    return std::nullopt;
}

} // namespace hilbgen
