#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbgen/int_series.hpp"

namespace hilbgen {

/// ADE singularity tags occurring on the quotient surfaces.
enum class AdeTag { A1, A2, A3, A5, D4, D5, E6 };

constexpr AdeTag kAdeTags[] = {AdeTag::A1, AdeTag::A2, AdeTag::A3, AdeTag::A5,
                               AdeTag::D4, AdeTag::D5, AdeTag::E6};

/// Order of the stabilizer subgroup fixing a point of that type
/// (A_{n-1} -> n, D4 -> 8, D5 -> 12, E6 -> 24).
long stabilizer_order(AdeTag tag);

/// Euler characteristic of the exceptional curve configuration of the
/// minimal resolution (number of vertices + 1).
long exceptional_euler_contribution(AdeTag tag);

const char* to_string(AdeTag tag);
AdeTag parse_ade_tag(const std::string& text);

struct EtaTemplateParams {
    long E = 0, F = 0, V = 0;
    friend bool operator==(const EtaTemplateParams&, const EtaTemplateParams&) = default;
};

/// One local fixed-point partition function: a normalized series with offset
/// 0 and leading coefficient 1.
struct LocalFactor {
    AdeTag delta = AdeTag::A1;
    long stabilizer = 2;
    IntSeries series;
    std::optional<EtaTemplateParams> template_params;
    std::vector<int> derived_from_rows;
};

using LocalSet = std::map<AdeTag, LocalFactor>;

/// The A-type local factor 1 / prod (1 - q^n); the same series for every
/// A_n, carried once per tag so substitution scales stay explicit.
LocalFactor local_a_type(AdeTag tag, std::size_t truncation);

/// Solves the catalog assembly identity of the given row for one unknown
/// local factor (dividing out the known ones and extracting the root where
/// the unknown appears with multiplicity > 1).
LocalFactor derive_local_from_row(AdeTag delta, int row_id, const LocalSet& known,
                                  std::size_t truncation);

/// Convenience pipeline: A-types, then D4 (row 6), D5 (row 9), E6 (row 10,
/// consuming the derived D4).
LocalSet standard_locals(std::size_t truncation);

/// Expansion of the quotient template
///   eta(q^2)^2 eta(q^{4E}) / (eta(q) eta(q^{2E}) eta(q^{2F}) eta(q^{2V}))
/// normalized by q^{1/24} so a valid parameter triple gives offset 0.
IntSeries template_expansion(const EtaTemplateParams& params,
                             std::size_t truncation);

/// Lexicographically first (E,F,V) triple in [1,bound]^3 whose template
/// expansion matches the factor, or nullopt.
std::optional<EtaTemplateParams> match_template(const LocalFactor& factor,
                                                long search_bound);

/// All matches within the bound.
std::vector<EtaTemplateParams> match_template_all(const LocalFactor& factor,
                                                  long search_bound);

} // namespace hilbgen
