#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hilbgen/errors.hpp"

namespace hilbgen {

/// Exact-integer Laurent polynomial in y. Stored dense from the lowest
/// exponent; both stored ends are nonzero unless the polynomial is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long lo, std::vector<mpz_class> coeffs);

    static LaurentPoly constant(const mpz_class& c);
    static LaurentPoly term(const mpz_class& c, long exponent);
    /// t = y + 2 + y^{-1}, the square of (y^{1/2} + y^{-1/2}).
    static LaurentPoly genus_t();

    bool is_zero() const { return coeffs_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(long exponent) const;

    bool is_monomial() const { return coeffs_.size() == 1; }
    bool is_palindromic() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const mpz_class& c, const LaurentPoly& p);

    /// y -> -y: the coefficient of y^j picks up (-1)^j.
    LaurentPoly substitute_neg_y() const;

    mpz_class evaluate_at_one() const;
    mpz_class evaluate_at_minus_one() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
        return os << p.to_string();
    }

private:
    void normalize();

    long lo_ = 0;
    std::vector<mpz_class> coeffs_; // empty == zero polynomial
};

} // namespace hilbgen
