#include <doctest.h>

#include <algorithm>

#include "hilbgen/catalog.hpp"
#include "test_support.hpp"

using namespace hilbgen;
using namespace hilbgen::testing;

TEST_SUITE_BEGIN("catalog");

TEST_CASE("euler bookkeeping closes on every row") {
    for (const ActionRecord& row : catalog()) {
        CAPTURE(row.row_id);
        CHECK(row.euler_quotient ==
              row.sing_type.smooth_locus_euler() + row.sing_type.r());
        CHECK(row.reference_product.weight() == row.weight());
        if (row.group != GroupTag::trivial)
            CHECK(row.sing_type.resolution_euler() == 24);
        CHECK(row.reference_product.level() == row.order);
        CHECK(group_order(row.group) == row.order);
    }
    CHECK(catalog().size() == 11);
    CHECK(catalog_row(2).sing_type.count(AdeTag::A1) == 16);
    CHECK_THROWS_AS(catalog_row(12), ParseError);
}

TEST_CASE("assembly formula") {
    LocalSet locals = standard_locals(64);

    CHECK(assemble_z(catalog_row(1), locals, 16) == IntSeries::one(16));

    IntSeries row2 = assemble_z(catalog_row(2), locals, 16);
    CHECK(row2.coeff(0) == 1);
    CHECK(row2.coeff(1) == 16);
    CHECK(row2.coeff(2) == 144);

    // Independent route for the order-4 row.
    IntSeries row4 = assemble_z(catalog_row(4), locals, 64);
    EtaProduct ref(4, {{2, 6}, {1, 4}, {4, -4}});
    CHECK(row4 == ref.expansion(64).inverse());

    CHECK_THROWS_AS(assemble_z(catalog_row(6), LocalSet{}, 16), MissingLocalFactor);
}

TEST_CASE("assembly rejects a stabilizer not dividing the group order") {
    ActionRecord fake = catalog_row(2);
    fake.sing_type = SingularityType({{AdeTag::D4, 1}});
    LocalSet locals = standard_locals(16);
    CHECK_THROWS_AS(assemble_z(fake, locals, 16), DivisibilityViolation);
}

TEST_CASE("translation extensions substitute q powers") {
    LocalSet locals = standard_locals(32);
    IntSeries row2 = assemble_z(catalog_row(2), locals, 16);

    TranslationExtension unit{2, 1};
    CHECK(apply_translation(row2, unit) == row2);

    TranslationExtension doubled{2, 2};
    IntSeries stretched = apply_translation(row2, doubled);
    CHECK(stretched.coeff(2) == 16);
    for (std::size_t i = 1; i < stretched.truncation_order(); i += 2)
        CHECK(stretched.coeff(i) == 0);
    CHECK(doubled.effective_level() == 4);

    CHECK(apply_translation(IntSeries::one(8), TranslationExtension{1, 3}) ==
          IntSeries::one(8));
}

TEST_CASE("singularity solver: cyclic groups") {
    std::vector<SingularityType> z2 = solve_singularity_types(GroupTag::Z2);
    REQUIRE(z2.size() == 1);
    CHECK(z2[0] == SingularityType({{AdeTag::A1, 16}}));

    std::vector<SingularityType> z3 = solve_singularity_types(GroupTag::Z3);
    REQUIRE(z3.size() == 1);
    CHECK(z3[0] == SingularityType({{AdeTag::A2, 9}}));

    std::vector<SingularityType> z4 = solve_singularity_types(GroupTag::Z4);
    SingularityType row4({{AdeTag::A3, 4}, {AdeTag::A1, 6}});
    CHECK(std::find(z4.begin(), z4.end(), row4) != z4.end());

    CHECK(solve_singularity_types(GroupTag::trivial).empty());
}

TEST_CASE("solver output is sorted and contains every realized row") {
    for (GroupTag g : {GroupTag::Z2, GroupTag::Z3, GroupTag::Z4, GroupTag::Z6,
                       GroupTag::Q, GroupTag::D, GroupTag::T}) {
        std::vector<SingularityType> solutions = solve_singularity_types(g);
        CAPTURE(to_string(g));
        CHECK(std::is_sorted(solutions.begin(), solutions.end()));
        for (const ActionRecord& row : catalog()) {
            if (row.group != g) continue;
            CHECK(std::find(solutions.begin(), solutions.end(), row.sing_type) !=
                  solutions.end());
        }
        for (const SingularityType& s : solutions)
            CHECK(s.resolution_euler() == 24);
    }
}

TEST_CASE("row verification") {
    LocalSet locals = standard_locals(96);

    RowReport row5 = verify_row(catalog_row(5), locals, 96);
    CHECK(row5.pass);

    RowReport row11 = verify_row(catalog_row(11), locals, 96);
    CHECK(row11.pass);
    CHECK(catalog_row(11).weight() == mpq_class(5, 2));

    ActionRecord fabricated = catalog_row(2);
    fabricated.sing_type = SingularityType({{AdeTag::A1, 15}});
    RowReport bad = verify_row(fabricated, locals, 32);
    CHECK_FALSE(bad.pass);
    bool resolution_failed = false;
    for (const RowCheck& c : bad.checks)
        if (c.name == "resolution_euler_24" && !c.pass) resolution_failed = true;
    CHECK(resolution_failed);
}

TEST_CASE("singularity type string form") {
    CHECK(catalog_row(6).sing_type.to_string() == "2D4 + 3A3 + 2A1");
    CHECK(catalog_row(1).sing_type.to_string() == "-");
    CHECK(catalog_row(9).sing_type.to_string() == "D5 + 3A3 + 2A2 + A1");
}

TEST_SUITE_END();
