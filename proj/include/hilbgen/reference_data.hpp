#pragma once

#include <array>
#include <map>
#include <vector>

#include "hilbgen/catalog.hpp"

namespace hilbgen {

// Single transcription surface for all external reference constants used by
// the checks. Everything downstream reads these tables; nothing else in the
// codebase hard-codes them.

struct CatalogRowData {
    int row_id;
    GroupTag group;
    long order;
    std::map<AdeTag, long> singularities;
    long euler_quotient;
    std::map<long, long> eta_exponents; // reciprocal series Z^{-1}
};

const std::vector<CatalogRowData>& catalog_row_data();

/// Normalized genus-h degree-d reference counts, rows h = 0..4, columns
/// d = 0..7.
const std::array<std::array<long long, 8>, 5>& reference_counts_table();

const std::map<GroupTag, std::set<AdeTag>>& allowed_stabilizer_table();

} // namespace hilbgen
