#include "hilbgen/reference_data.hpp"

namespace hilbgen {

const std::vector<CatalogRowData>& catalog_row_data() {
    using enum AdeTag;
    static const std::vector<CatalogRowData> rows = {
        {1, GroupTag::trivial, 1, {}, 0, {}},
        {2, GroupTag::Z2, 2, {{A1, 16}}, 8, {{1, 16}, {2, -8}}},
        {3, GroupTag::Z3, 3, {{A2, 9}}, 6, {{1, 9}, {3, -3}}},
        {4, GroupTag::Z4, 4, {{A3, 4}, {A1, 6}}, 6, {{2, 6}, {1, 4}, {4, -4}}},
        {5, GroupTag::Z6, 6, {{A5, 1}, {A2, 4}, {A1, 5}}, 6,
         {{3, 5}, {2, 4}, {1, 1}, {6, -4}}},
        {6, GroupTag::Q, 8, {{D4, 2}, {A3, 3}, {A1, 2}}, 5,
         {{4, 8}, {1, 2}, {8, -4}, {2, -1}}},
        {7, GroupTag::Q, 8, {{D4, 4}, {A1, 3}}, 5,
         {{4, 15}, {1, 4}, {8, -6}, {2, -8}}},
        {8, GroupTag::Q, 8, {{A3, 6}, {A1, 1}}, 5, {{4, 1}, {2, 6}, {8, -2}}},
        {9, GroupTag::D, 12, {{D5, 1}, {A3, 3}, {A2, 2}, {A1, 1}}, 5,
         {{6, 3}, {4, 3}, {3, 3}, {1, 1}, {12, -3}, {2, -2}}},
        {10, GroupTag::T, 24, {{E6, 1}, {D4, 1}, {A2, 4}, {A1, 1}}, 5,
         {{12, 5}, {8, 6}, {3, 1}, {1, 1}, {24, -4}, {6, -2}, {2, -2}}},
        {11, GroupTag::T, 24, {{A5, 1}, {A3, 2}, {A2, 4}}, 5,
         {{8, 4}, {6, 2}, {4, 1}, {24, -2}}},
    };
    return rows;
}

const std::array<std::array<long long, 8>, 5>& reference_counts_table() {
    static const std::array<std::array<long long, 8>, 5> table = {{
        {1, 16, 144, 960, 5264, 25056, 106944, 418176}, // h = 0
        {0, 0, -2, -32, -294, -2016, -11400, -56000},   // h = 1
        {0, 0, 0, 0, 3, 48, 448, 3136},                 // h = 2
        {0, 0, 0, 0, 0, 0, -4, -64},                    // h = 3
        {0, 0, 0, 0, 0, 0, 0, 0},                       // h = 4
    }};
    return table;
}

const std::map<GroupTag, std::set<AdeTag>>& allowed_stabilizer_table() {
    using enum AdeTag;
    static const std::map<GroupTag, std::set<AdeTag>> table = {
        {GroupTag::trivial, {}},
        {GroupTag::Z2, {A1}},
        {GroupTag::Z3, {A2}},
        {GroupTag::Z4, {A1, A3}},
        {GroupTag::Z6, {A1, A2, A5}},
        {GroupTag::Q, {A1, A3, D4}},
        {GroupTag::D, {A1, A2, A3, D5}},
        {GroupTag::T, {A1, A2, A3, A5, D4, E6}},
    };
    return table;
}

} // namespace hilbgen
