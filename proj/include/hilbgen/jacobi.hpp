#pragma once

#include <map>

#include "hilbgen/two_var_series.hpp"

namespace hilbgen {

/// The weak Jacobi form of weight -2 and index 1,
///   (y - 2 + y^{-1}) * prod (1-yq^n)^2 (1-y^{-1}q^n)^2 (1-q^n)^{-4}.
/// Half-integer powers of y only ever occur squared, so every stored
/// coefficient is an integer-exponent Laurent polynomial.
TwoVarSeries weak_jacobi_phi(std::size_t truncation);

/// prod_{n>=1, step*n < truncation} (1 + y q^{step*n})(1 + y^{-1} q^{step*n}).
TwoVarSeries symmetric_linear_product(long step, std::size_t truncation);

/// Expansion of a palindromic Laurent polynomial in the basis t^h with
/// t = y + 2 + y^{-1}.
struct GenusExpansion {
    std::map<long, mpz_class> coeffs; // h -> n_h, finitely supported

    mpz_class coeff(long h) const;
    LaurentPoly reconstruct() const;
};

GenusExpansion genus_expand(const LaurentPoly& p);

/// p(-1); equals the h = 0 genus coefficient since t(-1) = 0.
mpz_class genus_evaluate_at_minus_one(const LaurentPoly& p);

/// t^h as a Laurent polynomial (h >= 0).
LaurentPoly genus_t_power(long h);

} // namespace hilbgen
