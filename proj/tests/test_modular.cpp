#include <doctest.h>

#include <algorithm>
#include <complex>

#include "hilbgen/catalog.hpp"
#include "hilbgen/modular_numeric.hpp"

using namespace hilbgen;

namespace {

const std::vector<UpperHalfPoint>& points() {
    static const std::vector<UpperHalfPoint> pts = {UpperHalfPoint(0.3, 1.1),
                                                    UpperHalfPoint(-0.2, 1.7)};
    return pts;
}

} // namespace

TEST_SUITE_BEGIN("modular");

TEST_CASE("trivial product evaluates to 1") {
    EtaProduct trivial(1, {});
    std::complex<double> v = eval_eta_product(trivial, UpperHalfPoint(0.37, 2.1), 100);
    CHECK(std::abs(v - 1.0) < 1e-15);
}

TEST_CASE("eta self-duality at the fixed point") {
    EtaProduct eta(1, {{1, 1}});
    std::complex<double> tau(0.0, 1.0);
    std::complex<double> inverted = -1.0 / tau; // equals tau at the fixed point
    std::complex<double> lhs =
        eval_eta_product(eta, UpperHalfPoint(inverted.real(), inverted.imag()), 200);
    std::complex<double> rhs =
        std::sqrt(std::complex<double>(0.0, -1.0) * tau) *
        eval_eta_product(eta, UpperHalfPoint(0.0, 1.0), 200);
    CHECK(std::abs(lhs - rhs) < 1e-10);
    CHECK(std::abs(std::exp(std::complex<double>(0, 2 * 3.141592653589793) * tau)) <
          1.0);
}

TEST_CASE("convergence guard") {
    EtaProduct eta(1, {{1, 1}});
    CHECK_THROWS_AS(eval_eta_product(eta, UpperHalfPoint(0.0, 0.4), 200),
                    ConvergenceDomain);
    CHECK_THROWS_AS(UpperHalfPoint(0.0, -1.0), ConvergenceDomain);
}

TEST_CASE("identity matrix gives multiplier 1") {
    const EtaProduct& p = catalog_row(2).reference_product;
    MultiplierMeasurement m =
        measure_multiplier(p, GammaZeroElement{1, 0, 0, 1}, points(), 200);
    CHECK(std::abs(m.value - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(m.residual < 1e-12);
}

TEST_CASE("involution row multiplier is point-independent") {
    const EtaProduct& p = catalog_row(2).reference_product;
    std::vector<UpperHalfPoint> pts = {UpperHalfPoint(0.3, 1.1),
                                       UpperHalfPoint(-0.2, 1.7)};
    for (const GammaZeroElement& L : random_gamma0(2, 10, 10, 1)) {
        CAPTURE(L.a); CAPTURE(L.b); CAPTURE(L.c); CAPTURE(L.d);
        MultiplierMeasurement m = measure_multiplier(p, L, pts, 200);
        REQUIRE(m.residual < 1e-8);
        REQUIRE(m.unimodular(1e-8));
    }
}

TEST_CASE("integer-weight multipliers are 24th roots of unity") {
    for (int row_id : {2, 3, 4, 5}) {
        const ActionRecord& row = catalog_row(row_id);
        for (const GammaZeroElement& L :
             random_gamma0(row.order, 12, 5, 7)) {
            MultiplierMeasurement m =
                measure_multiplier(row.reference_product, L, points(), 200);
            std::complex<double> v24 = std::pow(m.value, 24);
            CAPTURE(row_id); CAPTURE(L.a); CAPTURE(L.c);
            REQUIRE(std::abs(v24 - std::complex<double>(1.0, 0.0)) < 1e-6);
        }
    }
}

TEST_CASE("cocycle modulus consistency") {
    const EtaProduct& p = catalog_row(4).reference_product;
    std::vector<GammaZeroElement> sample = random_gamma0(4, 12, 6, 11);
    REQUIRE(sample.size() >= 2);
    for (std::size_t i = 0; i + 1 < sample.size(); i += 2) {
        GammaZeroElement l1 = sample[i], l2 = sample[i + 1];
        MultiplierMeasurement m12 = measure_multiplier(p, l1.compose(l2), points(), 200);
        MultiplierMeasurement m1 = measure_multiplier(p, l1, points(), 200);
        MultiplierMeasurement m2 = measure_multiplier(p, l2, points(), 200);
        CHECK(std::abs(std::abs(m12.value) - 1.0) < 1e-8);
        CHECK(std::abs(std::abs(m1.value * m2.value) - 1.0) < 1e-8);
    }
}

TEST_CASE("wrong weight is detected") {
    for (int row_id : {2, 9, 10}) {
        const ActionRecord& row = catalog_row(row_id);
        GammaZeroElement L{1, 0, row.order, 1};
        MultiplierMeasurement right = measure_multiplier(
            row.reference_product, L, points(), 200);
        CHECK(right.residual < 1e-8);
        for (int s : {-1, 1}) {
            mpq_class wrong = row.reference_product.weight() + mpq_class(s, 2);
            MultiplierMeasurement m = measure_multiplier_with_weight(
                row.reference_product, L, points(), 200, wrong);
            CAPTURE(row_id); CAPTURE(s);
            REQUIRE(m.residual > 1e-3);
        }
    }
}

TEST_CASE("transformed points renormalize the term count") {
    const EtaProduct& p = catalog_row(10).reference_product; // level 24
    GammaZeroElement L{1, 0, 24, 1};
    MultiplierMeasurement m = measure_multiplier(p, L, points(), 200);
    CHECK(m.residual < 1e-8);
    CHECK(m.terms_used > 200); // Im(L tau) is small, so the tail needs more
    CHECK(m.truncation_bound < 1e-14);
}

TEST_CASE("sampler determinism and coverage") {
    std::vector<GammaZeroElement> a = random_gamma0(2, 2, 100, 5);
    std::vector<GammaZeroElement> b = random_gamma0(2, 2, 100, 5);
    CHECK(a == b);
    CHECK(std::find(a.begin(), a.end(), GammaZeroElement{1, 0, 2, 1}) != a.end());
    for (const GammaZeroElement& L : a) {
        CHECK(L.is_unimodular());
        CHECK(L.is_level(2));
        CHECK(std::max({std::abs(L.a), std::abs(L.b), std::abs(L.c),
                        std::abs(L.d)}) <= 2);
    }

    std::vector<GammaZeroElement> s = random_gamma0(1, 1, 100, 0);
    CHECK(std::find(s.begin(), s.end(), GammaZeroElement{0, -1, 1, 0}) != s.end());

    CHECK(random_gamma0(2, 2, 100, 6) != random_gamma0(2, 2, 100, 7));
    CHECK_THROWS_AS(random_gamma0(8, 4, 10, 0), EmptySample);
}

TEST_CASE("measurement input validation") {
    const EtaProduct& p = catalog_row(2).reference_product;
    GammaZeroElement L{1, 0, 2, 1};
    CHECK_THROWS_AS(measure_multiplier(p, L, {UpperHalfPoint(0.3, 1.1)}, 200),
                    EmptySample);
    CHECK_THROWS_AS(
        measure_multiplier(
            p, L, {UpperHalfPoint(0.3, 1.1), UpperHalfPoint(0.3, 1.1)}, 200),
        EmptySample);
    CHECK_THROWS_AS(
        measure_multiplier(
            p, L, {UpperHalfPoint(0.3, 0.2), UpperHalfPoint(0.1, 1.0)}, 200),
        ConvergenceDomain);
    CHECK_THROWS_AS(measure_multiplier(p, GammaZeroElement{1, 1, 1, 1}, points(), 200),
                    ConvergenceDomain);
}

TEST_SUITE_END();
