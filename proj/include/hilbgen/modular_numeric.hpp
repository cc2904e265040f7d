#pragma once

#include <complex>
#include <vector>

#include "hilbgen/eta_product.hpp"

namespace hilbgen {

struct UpperHalfPoint {
    double re = 0.0;
    double im = 1.0;

    UpperHalfPoint() = default;
    UpperHalfPoint(double re_, double im_);

    std::complex<double> value() const { return {re, im}; }
};

/// Element of the level-N congruence subgroup: determinant 1, c divisible by
/// the level.
struct GammaZeroElement {
    long a = 1, b = 0, c = 0, d = 1;

    bool is_unimodular() const { return a * d - b * c == 1; }
    bool is_level(long n) const { return n > 0 && c % n == 0; }
    std::complex<double> apply(std::complex<double> tau) const;
    std::complex<double> automorphy_denominator(std::complex<double> tau) const;
    GammaZeroElement compose(const GammaZeroElement& other) const;

    friend bool operator==(const GammaZeroElement&, const GammaZeroElement&) = default;
    friend auto operator<=>(const GammaZeroElement&, const GammaZeroElement&) = default;
};

/// Truncated-product evaluation of the eta quotient at tau. Requires
/// Im(tau) >= 0.5; factor magnitudes are accumulated in log space so large
/// exponents cannot overflow.
std::complex<double> eval_eta_product(const EtaProduct& p, UpperHalfPoint tau,
                                      long terms);

struct MultiplierMeasurement {
    std::complex<double> value{1.0, 0.0};
    double residual = 0.0;
    long terms_used = 0;          // largest effective term count
    double truncation_bound = 0.0; // documented |q|^terms bound

    bool unimodular(double tol) const {
        return std::abs(std::abs(value) - 1.0) <= tol;
    }
};

/// r(tau) = f(L tau) / ((c tau + d)^k f(tau)) at each test point with
/// k = weight(p) (principal branch for half-integer k); value is the mean,
/// residual the worst deviation from it. Evaluations at L tau renormalize the
/// term count against Im(L tau) so the documented truncation bound stays
/// below the rounding floor.
MultiplierMeasurement measure_multiplier(const EtaProduct& p,
                                         const GammaZeroElement& L,
                                         const std::vector<UpperHalfPoint>& taus,
                                         long terms);

/// Same measurement with an explicit weight (the wrong-weight control).
MultiplierMeasurement measure_multiplier_with_weight(
    const EtaProduct& p, const GammaZeroElement& L,
    const std::vector<UpperHalfPoint>& taus, long terms, const mpq_class& weight);

/// Deterministic pseudorandom sample of level-N elements with entries bounded
/// by `bound` (requires bound >= N). A fixed seed yields an identical list.
std::vector<GammaZeroElement> random_gamma0(long N, long bound, std::size_t count,
                                            unsigned long seed);

} // namespace hilbgen
