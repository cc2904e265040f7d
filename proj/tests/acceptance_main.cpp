// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "hilbgen/bps_tables.hpp"
#include "hilbgen/cli.hpp"
#include "hilbgen/json_io.hpp"
#include "hilbgen/modular_numeric.hpp"
#include "hilbgen/reference_data.hpp"

using namespace hilbgen;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass = false;
    double ms = 0.0;
    std::string detail;
};

struct Gate {
    std::vector<Criterion> results;
    bool all_pass = true;

    template <typename F>
    void run(int id, const std::string& label, F&& body) {
        Criterion c{id, label, false, 0.0, ""};
        auto start = std::chrono::steady_clock::now();
        try {
            c.pass = body(c);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        c.ms = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
        all_pass = all_pass && c.pass;
        results.push_back(std::move(c));
    }
};

long brute_force_partitions(long n, long max_part) {
    if (n == 0) return 1;
    if (n < 0 || max_part == 0) return 0;
    long total = 0;
    for (long part = std::min(n, max_part); part >= 1; --part)
        total += brute_force_partitions(n - part, part);
    return total;
}

bool within(double value, double bound) { return value < bound; }

} // namespace

int main() {
    Gate gate;

    gate.run(1, "normalized count table d<=7,h<=4 reproduced exactly (<5s)",
             [](Criterion& c) {
                 std::ostringstream out;
                 cli::RunConfig cfg;
                 cfg.format = cli::OutputFormat::json;
                 int code = cli::cmd_table2(cfg, 7, 4, /*check_reference=*/true, out);
                 BpsTable table = bps_table(7, 4);
                 const auto& ref = reference_counts_table();
                 bool exact = true;
                 for (long h = 0; h <= 4; ++h)
                     for (long d = 0; d <= 7; ++d)
                         exact = exact &&
                                 table.normalized(d, h) ==
                                     mpz_class(static_cast<long>(
                                         ref[static_cast<std::size_t>(h)]
                                            [static_cast<std::size_t>(d)]));
                 c.detail = "all 40 entries";
                 return code == 0 && exact;
             });
    if (!gate.results.empty() && gate.results.back().ms >= 5000.0) {
        gate.results.back().pass = false;
        gate.results.back().detail += " [runtime budget exceeded]";
        gate.all_pass = false;
    }

    gate.run(2, "assembly reproduces all 11 reciprocal products to order 200 (<30s)",
             [](Criterion& c) {
                 LocalSet a_types;
                 for (AdeTag tag : {AdeTag::A1, AdeTag::A2, AdeTag::A3, AdeTag::A5})
                     a_types.emplace(tag, local_a_type(tag, 200));

                 // Rows 2-5 close with the exact A-type factor alone.
                 bool ok = true;
                 for (int row_id : {2, 3, 4, 5}) {
                     const ActionRecord& row = catalog_row(row_id);
                     ok = ok && assemble_z(row, a_types, 200) *
                                        row.reference_product.expansion(200) ==
                                    IntSeries::one(200);
                 }

                 // Cross-derivation of the order-8 factor from two rows.
                 LocalFactor d4a = derive_local_from_row(AdeTag::D4, 6, a_types, 200);
                 LocalFactor d4b = derive_local_from_row(AdeTag::D4, 7, a_types, 200);
                 ok = ok && d4a.series == d4b.series &&
                      IntSeries::overlap_length(d4a.series, d4b.series) == 200;

                 LocalSet locals = standard_locals(200);
                 for (const ActionRecord& row : catalog())
                     ok = ok && assemble_z(row, locals, 200) *
                                        row.reference_product.expansion(200) ==
                                    IntSeries::one(200);
                 c.detail = "rows 1-11 + D4 cross-derivation";
                 return ok;
             });
    if (gate.results.back().ms >= 30000.0) {
        gate.results.back().pass = false;
        gate.results.back().detail += " [runtime budget exceeded]";
        gate.all_pass = false;
    }

    gate.run(3, "every reciprocal product certified: holomorphic, non-cuspidal, "
                "weight e/2, order 0, leading 1",
             [](Criterion& c) {
                 bool ok = true;
                 for (const ActionRecord& row : catalog()) {
                     CuspReport report = koehler_check(row.reference_product);
                     IntSeries f = row.reference_product.expansion(4);
                     ok = ok && report.holomorphic() && report.has_exact_zero() &&
                          !report.cuspidal() &&
                          row.reference_product.weight() == row.weight() &&
                          row.reference_product.order_at_infinity() == 0 &&
                          f.coeff(0) == 1;
                 }
                 c.detail = "exact rational cusp orders";
                 return ok;
             });

    gate.run(4, "Euler constraint exact on every non-trivial row; Z2/Z3 unique",
             [](Criterion& c) {
                 bool ok = catalog_row(1).sing_type.r() == 0 &&
                           catalog_row(1).euler_quotient == 0;
                 for (const ActionRecord& row : catalog()) {
                     if (row.group == GroupTag::trivial) continue;
                     ok = ok && row.sing_type.resolution_euler() == 24;
                 }
                 auto z2 = solve_singularity_types(GroupTag::Z2);
                 auto z3 = solve_singularity_types(GroupTag::Z3);
                 ok = ok && z2.size() == 1 &&
                      z2[0] == SingularityType({{AdeTag::A1, 16}});
                 ok = ok && z3.size() == 1 &&
                      z3[0] == SingularityType({{AdeTag::A2, 9}});
                 c.detail = "sum counts*(c - 1/k) = 24";
                 return ok;
             });

    gate.run(5, "genus-0 series: reference values, y=-1 specialization, h=0 row",
             [](Criterion& c) {
                 IntSeries gz = genus_zero_series(21);
                 const long expected[] = {1,     16,    144,    960,
                                          5264,  25056, 106944, 418176};
                 bool ok = true;
                 for (std::size_t d = 0; d < 8; ++d)
                     ok = ok && gz.coeff(d) == expected[d];

                 LocalSet locals = standard_locals(32);
                 IntSeries specialized = chi_y_series(catalog_row(2), locals, 21)
                                      .evaluate_y_minus_one();
                 BpsTable table = bps_table(20);
                 for (long d = 0; d <= 20; ++d) {
                     ok = ok && specialized.coeff(static_cast<std::size_t>(d)) ==
                                    gz.coeff(static_cast<std::size_t>(d));
                     ok = ok && table.normalized(d, 0) ==
                                    gz.coeff(static_cast<std::size_t>(d));
                 }
                 c.detail = "d <= 20";
                 return ok;
             });

    gate.run(6, "hyperelliptic gate: degree-0 counts, squared-form identity to "
                "order 200, weighted sums to d=20",
             [](Criterion& c) {
                 HyperellipticTable h = hyperelliptic_table(7);
                 bool ok = h.count(0, 1) == 4;
                 for (long g = 2; g <= 8; ++g) ok = ok && h.count(0, g) == 0;

                 IntSeries lhs =
                     EtaProduct(2, {{2, 8}, {1, -16}}).expansion(200);
                 std::vector<mpz_class> sixteen(200, 0);
                 sixteen[0] = 16;
                 IntSeries phi_eval = weak_jacobi_phi(200).evaluate_y_minus_one();
                 ok = ok && IntSeries(0, sixteen) * lhs == phi_eval * phi_eval;

                 ok = ok && verify_hilb_bopy(20).pass;
                 c.detail = "h_0(1)=4, identity, n_d(0) sums";
                 return ok;
             });

    gate.run(7, "smooth reference suite: degree-1 count 24, both displayed forms "
                "agree to order 30, y=-1 gives the reciprocal discriminant",
             [](Criterion& c) {
                 K3Reference ref = k3_reference_series(31);
                 bool ok = ref.euler.coeff(1) == 24 && ref.forms_agree;
                 IntSeries delta_inv = euler_factor(1, 31).pow(-24).with_offset(-1);
                 ok = ok && ref.refined.evaluate_y_minus_one() == delta_inv;
                 c.detail = "order 30";
                 return ok;
             });

    gate.run(8, "partition oracle: A-type coefficients equal brute-force counts "
                "for n <= 30",
             [](Criterion& c) {
                 LocalFactor a = local_a_type(AdeTag::A1, 31);
                 bool ok = true;
                 for (long n = 0; n <= 30; ++n)
                     ok = ok && a.series.coeff(static_cast<std::size_t>(n)) ==
                                    brute_force_partitions(n, n);
                 c.detail = "31 coefficients";
                 return ok;
             });

    gate.run(9, "numerical transformation law: residual < 1e-8, |v|-1 < 1e-8, "
                "wrong-weight control > 1e-3 (<10s)",
             [](Criterion& c) {
                 const std::vector<UpperHalfPoint> points = {
                     UpperHalfPoint(0.3, 1.1), UpperHalfPoint(-0.2, 1.7)};
                 bool ok = true;
                 for (const ActionRecord& row : catalog()) {
                     long bound = std::max<long>(20, row.order);
                     std::vector<GammaZeroElement> sample = random_gamma0(
                         row.order, bound, 10,
                         static_cast<unsigned long>(row.row_id));
                     GammaZeroElement control{1, 0, row.order, 1};
                     for (const GammaZeroElement& L : sample) {
                         MultiplierMeasurement m = measure_multiplier(
                             row.reference_product, L, points, 200);
                         ok = ok && within(m.residual, 1e-8) && m.unimodular(1e-8);
                         if (L.c != 0) control = L;
                     }
                     for (int s : {-1, 1}) {
                         MultiplierMeasurement m = measure_multiplier_with_weight(
                             row.reference_product, control, points, 200,
                             row.reference_product.weight() + mpq_class(s, 2));
                         ok = ok && m.residual > 1e-3;
                     }
                 }
                 c.detail = "10 matrices/row, entries <= max(20, level)";
                 return ok;
             });
    if (gate.results.back().ms >= 10000.0) {
        gate.results.back().pass = false;
        gate.results.back().detail += " [runtime budget exceeded]";
        gate.all_pass = false;
    }

    gate.run(10, "property suites: ring axioms, inverse/root round trips, genus "
                 "round trip (1000 cases each)",
             [](Criterion& c) {
                 std::mt19937_64 rng(20260808);
                 auto rand_small = [&](long lo, long hi) {
                     return lo + static_cast<long>(
                                     rng() % static_cast<unsigned long>(hi - lo + 1));
                 };
                 auto random_series = [&](std::size_t n) {
                     std::vector<mpz_class> v(n);
                     for (auto& x : v) x = rand_small(-9, 9);
                     return IntSeries(0, std::move(v));
                 };

                 bool ok = true;
                 for (int iter = 0; iter < 1000 && ok; ++iter) {
                     std::size_t n = static_cast<std::size_t>(rand_small(5, 12));
                     IntSeries a = random_series(n), b = random_series(n),
                               s = random_series(n);
                     ok = ok && a * (b + s) == a * b + a * s && a * b == b * a &&
                          (a * b) * s == a * (b * s);
                 }
                 for (int iter = 0; iter < 1000 && ok; ++iter) {
                     std::size_t n = static_cast<std::size_t>(rand_small(4, 10));
                     IntSeries a = random_series(n);
                     std::vector<mpz_class> coeffs = a.coeffs();
                     coeffs[0] = (rng() % 2 == 0) ? 1 : -1;
                     IntSeries unit(0, coeffs);
                     ok = ok && unit * unit.inverse() == IntSeries::one(n) &&
                          unit.inverse() * unit == IntSeries::one(n);
                 }
                 for (int iter = 0; iter < 1000 && ok; ++iter) {
                     std::size_t n = static_cast<std::size_t>(rand_small(4, 9));
                     long e = rand_small(2, 5);
                     IntSeries a = random_series(n);
                     std::vector<mpz_class> coeffs = a.coeffs();
                     coeffs[0] = 1;
                     IntSeries base(0, coeffs);
                     ok = ok && base.pow(e).nth_root(e) == base;
                 }
                 for (int iter = 0; iter < 1000 && ok; ++iter) {
                     long top = rand_small(0, 12);
                     LaurentPoly p = LaurentPoly::constant(rand_small(-9, 9));
                     for (long j = 1; j <= top; ++j) {
                         mpz_class v = rand_small(-9, 9);
                         p = p + LaurentPoly::term(v, j) + LaurentPoly::term(v, -j);
                     }
                     ok = ok && genus_expand(p).reconstruct() == p;
                 }
                 c.detail = "4000 cases total, zero failures";
                 return ok;
             });

    std::cout << "acceptance suite\n";
    for (const Criterion& c : gate.results) {
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id
                  << ": " << c.label;
        if (!c.detail.empty()) std::cout << " — " << c.detail;
        std::cout << " (" << static_cast<long>(c.ms) << " ms)\n";
    }
    std::cout << (gate.all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
    return gate.all_pass ? 0 : 1;
}
