#include <doctest.h>

#include "hilbgen/catalog.hpp"
#include "hilbgen/local_factors.hpp"
#include "test_support.hpp"

using namespace hilbgen;
using namespace hilbgen::testing;

TEST_SUITE_BEGIN("local");

TEST_CASE("A-type factor counts partitions") {
    LocalFactor a1 = local_a_type(AdeTag::A1, 31);
    CHECK(a1.stabilizer == 2);
    CHECK(a1.series.offset() == 0);
    CHECK(a1.series.coeff(0) == 1);
    CHECK(a1.series.coeff(1) == 1);
    CHECK(a1.series.coeff(5) == 7);
    for (long n = 0; n <= 30; ++n)
        CHECK(a1.series.coeff(static_cast<std::size_t>(n)) == partition_count(n));

    // The closed form does not depend on n.
    LocalFactor a5 = local_a_type(AdeTag::A5, 31);
    CHECK(a5.series == a1.series);
    CHECK(a5.stabilizer == 6);
    CHECK_THROWS_AS(local_a_type(AdeTag::D4, 8), MissingLocalFactor);
}

TEST_CASE("D4 derivations from the two quaternion rows agree" *
          doctest::timeout(60)) {
    LocalSet a_types;
    for (AdeTag tag : {AdeTag::A1, AdeTag::A2, AdeTag::A3, AdeTag::A5})
        a_types.emplace(tag, local_a_type(tag, 200));
    LocalFactor from6 = derive_local_from_row(AdeTag::D4, 6, a_types, 200);
    LocalFactor from7 = derive_local_from_row(AdeTag::D4, 7, a_types, 200);
    CHECK(from6.series == from7.series);
    CHECK(IntSeries::overlap_length(from6.series, from7.series) == 200);
    CHECK(from6.series.coeff(0) == 1);
}

TEST_CASE("derived factor prefixes (golden values)") {
    LocalSet locals = standard_locals(16);
    auto prefix = [&](AdeTag tag) {
        std::vector<long> out;
        for (std::size_t i = 0; i < 10; ++i)
            out.push_back(locals.at(tag).series.coeff(i).get_si());
        return out;
    };
    CHECK(prefix(AdeTag::D4) == std::vector<long>{1, 1, 0, 1, 3, 3, 1, 3, 8, 8});
    CHECK(prefix(AdeTag::D5) == std::vector<long>{1, 1, 0, 1, 1, 1, 3, 3, 2, 4});
    CHECK(prefix(AdeTag::E6) == std::vector<long>{1, 1, 0, 1, 0, 0, 1, 0, 2, 2});
}

TEST_CASE("reconstruction closes for every catalog row" * doctest::timeout(120)) {
    LocalSet locals = standard_locals(200);
    for (const ActionRecord& row : catalog()) {
        CAPTURE(row.row_id);
        IntSeries z = assemble_z(row, locals, 200);
        IntSeries product = z * row.reference_product.expansion(200);
        REQUIRE(product == IntSeries::one(200));
        REQUIRE(IntSeries::overlap_length(product, IntSeries::one(200)) == 200);
    }
}

TEST_CASE("A-type rows close without any derived input") {
    LocalSet a_types;
    for (AdeTag tag : {AdeTag::A1, AdeTag::A2, AdeTag::A3, AdeTag::A5})
        a_types.emplace(tag, local_a_type(tag, 200));
    for (int row_id : {2, 3, 4, 5}) {
        const ActionRecord& row = catalog_row(row_id);
        IntSeries z = assemble_z(row, a_types, 200);
        REQUIRE(z * row.reference_product.expansion(200) == IntSeries::one(200));
    }
}

TEST_CASE("derivation error paths") {
    LocalSet a_types;
    for (AdeTag tag : {AdeTag::A1, AdeTag::A2, AdeTag::A3, AdeTag::A5})
        a_types.emplace(tag, local_a_type(tag, 32));
    // Row 10 needs the D4 factor.
    CHECK_THROWS_AS(derive_local_from_row(AdeTag::E6, 10, a_types, 32),
                    MissingLocalFactor);
    // Row 2 has no D4 point at all.
    CHECK_THROWS_AS(derive_local_from_row(AdeTag::D4, 2, a_types, 32),
                    InconsistentDerivation);
}

TEST_CASE("template search finds the quotient parameters" *
          doctest::timeout(120)) {
    LocalSet locals = standard_locals(96);

    auto check_match = [&](AdeTag tag, EtaTemplateParams expected) {
        LocalFactor factor = locals.at(tag);
        std::optional<EtaTemplateParams> found = match_template(factor, 30);
        REQUIRE(found.has_value());
        CHECK(*found == expected);
        CHECK(template_expansion(*found, factor.series.truncation_order()) ==
              factor.series);
    };
    check_match(AdeTag::D4, EtaTemplateParams{2, 2, 2});
    check_match(AdeTag::D5, EtaTemplateParams{3, 2, 3});
    check_match(AdeTag::E6, EtaTemplateParams{6, 4, 4});
}

TEST_CASE("template search rejects corruption and empty bounds") {
    LocalSet locals = standard_locals(48);
    LocalFactor d4 = locals.at(AdeTag::D4);

    std::vector<mpz_class> coeffs = d4.series.coeffs();
    coeffs[7] += 1;
    LocalFactor corrupted = d4;
    corrupted.series = IntSeries(0, coeffs);
    CHECK_FALSE(match_template(corrupted, 30).has_value());
    CHECK(match_template_all(corrupted, 30).empty());

    CHECK_FALSE(match_template(d4, 0).has_value());
}

TEST_SUITE_END();
