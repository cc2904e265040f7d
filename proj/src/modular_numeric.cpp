#include "hilbgen/modular_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace hilbgen {

namespace {

constexpr double kPi = std::numbers::pi;

struct LogEval {
    std::complex<double> log_value{0.0, 0.0};
    long terms_used = 0;
    double truncation_bound = 0.0;
};

// Term count needed to push the product tail below the double rounding floor
// at Im(tau) = im.
long effective_terms(double im, long base) {
    double needed = 42.0 / (2.0 * kPi * im);
    if (needed > 5e7)
        throw ConvergenceDomain("evaluation point too close to the real axis (Im = " +
                                std::to_string(im) + ")");
    return std::max(base, static_cast<long>(std::ceil(needed)));
}

// log eta(m tau) = i pi (m tau) / 12 + sum_{n<=T} log(1 - q_m^n).
std::complex<double> log_eta(std::complex<double> mtau, long terms) {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> q = std::exp(2.0 * kPi * i * mtau);
    std::complex<double> res = i * kPi * mtau / 12.0;
    std::complex<double> qn(1.0, 0.0);
    for (long n = 1; n <= terms; ++n) {
        qn *= q;
        res += std::log(1.0 - qn);
    }
    return res;
}

LogEval eval_log(const EtaProduct& p, std::complex<double> tau, long base_terms) {
    if (tau.imag() <= 0.0)
        throw ConvergenceDomain("evaluation point must lie in the upper half plane");
    LogEval out;
    for (const auto& [m, a] : p.exponents()) {
        if (a == 0) continue;
        long terms = effective_terms(static_cast<double>(m) * tau.imag(), base_terms);
        out.log_value += static_cast<double>(a) * log_eta(static_cast<double>(m) * tau, terms);
        out.terms_used = std::max(out.terms_used, terms);
        double qabs = std::exp(-2.0 * kPi * m * tau.imag());
        out.truncation_bound =
            std::max(out.truncation_bound, std::pow(qabs, static_cast<double>(terms)));
    }
    return out;
}

} // namespace

UpperHalfPoint::UpperHalfPoint(double re_, double im_) : re(re_), im(im_) {
    if (!(im > 0.0))
        throw ConvergenceDomain("point must have positive imaginary part");
}

std::complex<double> GammaZeroElement::apply(std::complex<double> tau) const {
    return (static_cast<double>(a) * tau + static_cast<double>(b)) /
           (static_cast<double>(c) * tau + static_cast<double>(d));
}

std::complex<double> GammaZeroElement::automorphy_denominator(
    std::complex<double> tau) const {
    return static_cast<double>(c) * tau + static_cast<double>(d);
}

GammaZeroElement GammaZeroElement::compose(const GammaZeroElement& o) const {
    return GammaZeroElement{a * o.a + b * o.c, a * o.b + b * o.d,
                            c * o.a + d * o.c, c * o.b + d * o.d};
}

std::complex<double> eval_eta_product(const EtaProduct& p, UpperHalfPoint tau,
                                      long terms) {
    if (tau.im < 0.5)
        throw ConvergenceDomain("eta product evaluation requires Im(tau) >= 0.5");
    if (terms < 1) throw ConvergenceDomain("term count must be positive");
    return std::exp(eval_log(p, tau.value(), terms).log_value);
}

MultiplierMeasurement measure_multiplier_with_weight(
    const EtaProduct& p, const GammaZeroElement& L,
    const std::vector<UpperHalfPoint>& taus, long terms, const mpq_class& weight) {
    if (taus.size() < 2)
        throw EmptySample("multiplier measurement needs at least two test points");
    bool has_distinct = false;
    for (std::size_t i = 1; i < taus.size() && !has_distinct; ++i)
        has_distinct = taus[i].re != taus[0].re || taus[i].im != taus[0].im;
    if (!has_distinct)
        throw EmptySample("test points must not all coincide");
    if (!L.is_unimodular() || !L.is_level(p.level()))
        throw ConvergenceDomain("matrix is not a level " +
                                std::to_string(p.level()) + " element");
    double k = weight.get_d();

    MultiplierMeasurement out;
    std::vector<std::complex<double>> ratios;
    for (const UpperHalfPoint& point : taus) {
        if (point.im < 0.5)
            throw ConvergenceDomain("test points must have Im(tau) >= 0.5");
        std::complex<double> tau = point.value();
        LogEval base = eval_log(p, tau, terms);
        if (std::exp(base.log_value.real()) < 1e-12)
            throw NumericallySingular("|f(tau)| below 1e-12 at a test point");
        LogEval moved = eval_log(p, L.apply(tau), terms);
        // Principal branch for the half-integer automorphy factor.
        std::complex<double> denom_log =
            std::log(L.automorphy_denominator(tau)) * k;
        ratios.push_back(std::exp(moved.log_value - base.log_value - denom_log));
        out.terms_used = std::max({out.terms_used, base.terms_used, moved.terms_used});
        out.truncation_bound =
            std::max({out.truncation_bound, base.truncation_bound, moved.truncation_bound});
    }

    std::complex<double> mean(0.0, 0.0);
    for (const auto& r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    out.value = mean;
    out.residual = 0.0;
    for (const auto& r : ratios)
        out.residual = std::max(out.residual, std::abs(r - mean));
    return out;
}

MultiplierMeasurement measure_multiplier(const EtaProduct& p,
                                         const GammaZeroElement& L,
                                         const std::vector<UpperHalfPoint>& taus,
                                         long terms) {
    return measure_multiplier_with_weight(p, L, taus, terms, p.weight());
}

std::vector<GammaZeroElement> random_gamma0(long N, long bound, std::size_t count,
                                            unsigned long seed) {
    if (N < 1) throw EmptySample("level must be positive");
    if (bound < N)
        throw EmptySample("entry bound " + std::to_string(bound) +
                          " below level " + std::to_string(N));

    // Enumerate every element within the entry bound, then take a seeded
    // pseudorandom subset. (a,c) determines (b,d) up to b -> b + ta,
    // d -> d + tc.
    std::vector<GammaZeroElement> all;
    for (long a = -bound; a <= bound; ++a) {
        for (long c = -bound; c <= bound; ++c) {
            if (c % N != 0) continue;
            if (c == 0) {
                if (a != 1 && a != -1) continue;
                for (long b = -bound; b <= bound; ++b)
                    all.push_back(GammaZeroElement{a, b, 0, a});
                continue;
            }
            if (std::gcd(std::abs(a), std::abs(c)) != 1) continue;
            // Base solution of a*d - b*c = 1 via the extended Euclid identity.
            long g, x, y; // g = a*x + c*y
            {
                long r0 = a, r1 = c, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
                while (r1 != 0) {
                    long quot = r0 / r1;
                    std::tie(r0, r1) = std::make_tuple(r1, r0 - quot * r1);
                    std::tie(x0, x1) = std::make_tuple(x1, x0 - quot * x1);
                    std::tie(y0, y1) = std::make_tuple(y1, y0 - quot * y1);
                }
                g = r0; x = x0; y = y0;
            }
            if (g != 1 && g != -1) continue;
            long d0 = (g == 1) ? x : -x;
            long b0 = (g == 1) ? -y : y;
            // Slide d across the admissible window.
            long tmin = (-bound - d0) / std::abs(c) - 2;
            long tmax = (bound - d0) / std::abs(c) + 2;
            for (long t = tmin; t <= tmax; ++t) {
                long d = d0 + t * c;
                long b = b0 + t * a;
                if (std::abs(d) > bound || std::abs(b) > bound) continue;
                GammaZeroElement m{a, b, c, d};
                if (m.is_unimodular()) all.push_back(m);
            }
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.empty()) throw EmptySample("no level elements within the entry bound");

    // Explicit Fisher-Yates so the list is identical across standard
    // libraries for a fixed seed.
    std::mt19937_64 rng(seed);
    for (std::size_t i = all.size() - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(all[i], all[j]);
    }
    if (all.size() > count) all.resize(count);
    return all;
}

} // namespace hilbgen
