#include "hilbgen/jacobi.hpp"

#include "hilbgen/eta_product.hpp"

namespace hilbgen {

TwoVarSeries symmetric_linear_product(long step, std::size_t truncation) {
    TwoVarSeries acc = TwoVarSeries::one(truncation);
    for (long n = 1; static_cast<unsigned long long>(n) * step < truncation; ++n) {
        std::size_t e = static_cast<std::size_t>(n * step);
        // (1 + y q^e)(1 + y^{-1} q^e) = 1 + (y + y^{-1}) q^e + q^{2e}
        std::vector<LaurentPoly> f(truncation);
        f[0] = LaurentPoly::constant(1);
        f[e] = LaurentPoly(-1, {1, 0, 1});
        if (2 * e < truncation) f[2 * e] = LaurentPoly::constant(1);
        acc = acc * TwoVarSeries(0, std::move(f));
    }
    return acc;
}

TwoVarSeries weak_jacobi_phi(std::size_t truncation) {
    // prod (1-yq^n)^2 (1-y^{-1}q^n)^2 built factor by factor.
    TwoVarSeries acc = TwoVarSeries::one(truncation);
    for (std::size_t n = 1; n < truncation; ++n) {
        // (1 - y q^n)^2 = 1 - 2y q^n + y^2 q^{2n}
        std::vector<LaurentPoly> f(truncation);
        f[0] = LaurentPoly::constant(1);
        f[n] = LaurentPoly::term(-2, 1);
        if (2 * n < truncation) f[2 * n] = LaurentPoly::term(1, 2);
        acc = acc * TwoVarSeries(0, std::move(f));

        std::vector<LaurentPoly> g(truncation);
        g[0] = LaurentPoly::constant(1);
        g[n] = LaurentPoly::term(-2, -1);
        if (2 * n < truncation) g[2 * n] = LaurentPoly::term(1, -2);
        acc = acc * TwoVarSeries(0, std::move(g));
    }
    acc = acc * TwoVarSeries::from_int_series(euler_factor(1, truncation).pow(-4));
    return acc.scaled(LaurentPoly(-1, {1, -2, 1}));
}

mpz_class GenusExpansion::coeff(long h) const {
    auto it = coeffs.find(h);
    return it == coeffs.end() ? mpz_class(0) : it->second;
}

LaurentPoly GenusExpansion::reconstruct() const {
    LaurentPoly acc;
    for (const auto& [h, n] : coeffs) acc = acc + n * genus_t_power(h);
    return acc;
}

LaurentPoly genus_t_power(long h) {
    if (h < 0) throw NonIntegralExpansion("negative genus power");
    LaurentPoly acc = LaurentPoly::constant(1);
    for (long i = 0; i < h; ++i) acc = acc * LaurentPoly::genus_t();
    return acc;
}

GenusExpansion genus_expand(const LaurentPoly& p) {
    if (!p.is_palindromic())
        throw NotPalindromic("genus expansion requires a palindromic input, got " +
                             p.to_string());
    GenusExpansion out;
    LaurentPoly rem = p;
    // t^h has leading term y^h with coefficient 1, so stripping from the top
    // degree downward stays integral.
    while (!rem.is_zero() && rem.hi() > 0) {
        long h = rem.hi();
        mpz_class n = rem.coeff(h);
        out.coeffs[h] = n;
        rem = rem - n * genus_t_power(h);
    }
    if (!rem.is_zero()) {
        out.coeffs[0] = rem.coeff(0);
        rem = rem - LaurentPoly::constant(out.coeffs[0]);
    }
    if (!rem.is_zero())
        throw NonIntegralExpansion("genus expansion left a nonzero remainder " +
                                   rem.to_string());
    return out;
}

mpz_class genus_evaluate_at_minus_one(const LaurentPoly& p) {
    if (!p.is_palindromic())
        throw NotPalindromic("genus evaluation requires a palindromic input, got " +
                             p.to_string());
    return p.evaluate_at_minus_one();
}

} // namespace hilbgen
