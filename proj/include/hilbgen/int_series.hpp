#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include <gmpxx.h>

#include "hilbgen/errors.hpp"

namespace hilbgen {

/// Truncated formal power series in q with exact integer coefficients and a
/// rational leading-exponent offset (denominator dividing 24).
///
/// coeffs()[i] is the coefficient of q^(offset + i); coefficients are valid
/// for exponents < offset + truncation_order().
class IntSeries {
public:
    IntSeries() = default;
    IntSeries(mpq_class offset, std::vector<mpz_class> coeffs);

    static IntSeries zero(std::size_t truncation);
    static IntSeries one(std::size_t truncation);

    const mpq_class& offset() const { return offset_; }
    std::size_t truncation_order() const { return coeffs_.size(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& coeff(std::size_t i) const { return coeffs_.at(i); }

    bool has_integer_offset() const;
    bool is_zero() const;

    /// Shrinks the validity window. Growing it would fabricate coefficients.
    IntSeries truncated(std::size_t order) const;

    /// Same coefficients carried at a different offset.
    IntSeries with_offset(const mpq_class& new_offset) const;

    IntSeries operator-() const;
    friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator*(const IntSeries& a, const IntSeries& b);

    /// Multiplicative inverse; requires leading coefficient ±1.
    IntSeries inverse() const;

    /// a^e by repeated squaring; e < 0 requires leading coefficient ±1.
    IntSeries pow(long e) const;

    /// q -> q^m. Offset and the validity window scale by m.
    IntSeries substitute_q_power(long m) const;

    /// b with b^n = a to the truncation order. Requires leading coefficient 1
    /// and an offset representable after division by n. Throws InexactRoot as
    /// soon as a coefficient fails to be an integer.
    IntSeries nth_root(long n) const;

    /// Equal iff offsets match and coefficients agree on the overlap window.
    friend bool operator==(const IntSeries& a, const IntSeries& b);
    friend bool operator!=(const IntSeries& a, const IntSeries& b) { return !(a == b); }

    /// Length of the window compared by operator== (0 if offsets differ).
    static std::size_t overlap_length(const IntSeries& a, const IntSeries& b);

    std::string to_string(std::size_t max_terms = 8) const;

    friend std::ostream& operator<<(std::ostream& os, const IntSeries& s) {
        return os << s.to_string();
    }

private:
    void validate_offset() const;

    mpq_class offset_ = 0;
    std::vector<mpz_class> coeffs_;
};

namespace detail {
// Truncated convolutions; both return exactly `out_len` coefficients.
std::vector<mpz_class> convolve_schoolbook(const std::vector<mpz_class>& a,
                                           const std::vector<mpz_class>& b,
                                           std::size_t out_len);
std::vector<mpz_class> convolve_karatsuba(const std::vector<mpz_class>& a,
                                          const std::vector<mpz_class>& b,
                                          std::size_t out_len);
// Size above which multiplication switches to the divide-and-conquer routine.
constexpr std::size_t kKaratsubaThreshold = 512;
} // namespace detail

} // namespace hilbgen
