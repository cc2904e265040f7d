#include "hilbgen/bps_tables.hpp"

namespace hilbgen {

namespace {

// prod (1-q^{step*n})^4 / ((1+y q^{step*n})^2 (1+y^{-1} q^{step*n})^2).
TwoVarSeries chi_correction_block(long step, std::size_t truncation) {
    TwoVarSeries sym = symmetric_linear_product(step, truncation);
    TwoVarSeries denominator = (sym * sym).inverse();
    return TwoVarSeries::from_int_series(euler_factor(step, truncation).pow(4)) *
           denominator;
}

} // namespace

TwoVarSeries chi_y_series(const ActionRecord& row, const LocalSet& locals,
                          std::size_t truncation) {
    if (row.group == GroupTag::trivial)
        throw InconsistentDerivation(
            "the refined series is defined for non-trivial actions only");
    IntSeries z = assemble_z(row, locals, truncation);
    return TwoVarSeries::from_int_series(z) *
           chi_correction_block(row.order, truncation);
}

mpz_class BpsTable::normalized(long d, long h) const {
    auto it = entries.find({d, h});
    return it == entries.end() ? mpz_class(0) : it->second;
}

mpz_class BpsTable::raw(long d, long h) const {
    return normalization * normalized(d, h);
}

BpsTable bps_table(long dmax, long hmax) {
    if (dmax < 0) throw InconsistentDerivation("dmax must be >= 0");
    std::size_t truncation = static_cast<std::size_t>(dmax) + 1;

    // prod (1-q^{2n})^12 (1-q^n)^{-16} (1+yq^{2n})^{-2} (1+y^{-1}q^{2n})^{-2}
    TwoVarSeries sym = symmetric_linear_product(2, truncation);
    TwoVarSeries series =
        TwoVarSeries::from_int_series(euler_factor(2, truncation).pow(12) *
                                      euler_factor(1, truncation).pow(-16)) *
        (sym * sym).inverse();

    BpsTable table;
    table.dmax = dmax;
    table.hmax = hmax;
    for (long d = 0; d <= dmax; ++d) {
        GenusExpansion expansion = genus_expand(series.qcoeff(static_cast<std::size_t>(d)));
        for (const auto& [h, value] : expansion.coeffs)
            if (value != 0 && h <= hmax) table.entries[{d, h}] = value;
    }
    return table;
}

BpsTable bps_table(long dmax) { return bps_table(dmax, dmax + 1); }

IntSeries genus_zero_series(std::size_t truncation) {
    return euler_factor(2, truncation).pow(8) *
           euler_factor(1, truncation).pow(-16);
}

mpz_class HyperellipticTable::count(long d, long g) const {
    auto it = entries.find({d, g});
    return it == entries.end() ? mpz_class(0) : it->second;
}

HyperellipticTable hyperelliptic_table(long dmax) {
    if (dmax < 0) throw InconsistentDerivation("dmax must be >= 0");
    std::size_t truncation = static_cast<std::size_t>(dmax) + 1;
    TwoVarSeries phi_neg = weak_jacobi_phi(truncation).substitute_neg_y();
    TwoVarSeries squared = phi_neg * phi_neg;

    HyperellipticTable table;
    table.dmax = dmax;
    for (long d = 0; d <= dmax; ++d) {
        LaurentPoly coeff = 4 * squared.qcoeff(static_cast<std::size_t>(d));
        GenusExpansion expansion = genus_expand(coeff);
        for (const auto& [h, value] : expansion.coeffs) {
            if (value == 0) continue;
            // Coefficients live in the basis t^{g+1}, g >= 1.
            if (h < 2)
                throw BasisOffsetViolation(
                    "degree " + std::to_string(d) + " coefficient has a t^" +
                    std::to_string(h) + " component " + value.get_str());
            table.entries[{d, h - 1}] = value;
        }
    }
    return table;
}

BopyReport verify_hilb_bopy(long dmax) {
    BopyReport report;
    report.dmax = dmax;
    IntSeries gz = genus_zero_series(static_cast<std::size_t>(dmax) + 1);
    HyperellipticTable h = hyperelliptic_table(dmax);
    for (long d = 0; d <= dmax; ++d) {
        BopyCheck check;
        check.d = d;
        check.lhs = 16 * gz.coeff(static_cast<std::size_t>(d));
        check.rhs = 0;
        for (long g = 1; g <= d + 1; ++g) {
            mpz_class four_pow_g;
            mpz_ui_pow_ui(four_pow_g.get_mpz_t(), 4, static_cast<unsigned long>(g));
            check.rhs += h.count(d, g) * four_pow_g;
        }
        check.pass = check.lhs == check.rhs;
        report.pass = report.pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

K3Reference k3_reference_series(std::size_t truncation) {
    K3Reference out;
    out.euler =
        euler_factor(1, truncation).pow(-24).with_offset(-1);

    TwoVarSeries sym = symmetric_linear_product(1, truncation);
    TwoVarSeries product_form =
        TwoVarSeries::from_int_series(euler_factor(1, truncation).pow(-20)) *
        (sym * sym).inverse();
    out.refined = TwoVarSeries(-1, product_form.qcoeffs());

    // Quotient form check, rearranged to avoid dividing by a non-unit:
    // refined * discriminant * phi(q,-y) must equal -t.
    IntSeries discriminant = euler_factor(1, truncation).pow(24).with_offset(1);
    TwoVarSeries phi_neg = weak_jacobi_phi(truncation).substitute_neg_y();
    TwoVarSeries lhs =
        out.refined * TwoVarSeries::from_int_series(discriminant) * phi_neg;
    TwoVarSeries minus_t = TwoVarSeries::from_laurent(
        -LaurentPoly::genus_t(), lhs.truncation_order());
    out.forms_agree = lhs == minus_t && lhs.qoffset() == 0;
    return out;
}

} // namespace hilbgen
