#include "hilbgen/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

namespace hilbgen {

LaurentPoly::LaurentPoly(long lo, std::vector<mpz_class> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {
    normalize();
}

void LaurentPoly::normalize() {
    std::size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
    if (front == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    std::size_t back = coeffs_.size();
    while (back > front && coeffs_[back - 1] == 0) --back;
    if (front > 0 || back < coeffs_.size()) {
        coeffs_ = std::vector<mpz_class>(coeffs_.begin() + front,
                                         coeffs_.begin() + back);
        lo_ += static_cast<long>(front);
    }
}

LaurentPoly LaurentPoly::constant(const mpz_class& c) {
    return LaurentPoly(0, {c});
}

LaurentPoly LaurentPoly::term(const mpz_class& c, long exponent) {
    return LaurentPoly(exponent, {c});
}

LaurentPoly LaurentPoly::genus_t() { return LaurentPoly(-1, {1, 2, 1}); }

mpz_class LaurentPoly::coeff(long exponent) const {
    if (is_zero() || exponent < lo_ || exponent > hi()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - lo_)];
}

bool LaurentPoly::is_palindromic() const {
    if (is_zero()) return true;
    if (lo_ != -hi()) return false;
    std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
}

LaurentPoly LaurentPoly::operator-() const {
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return LaurentPoly(lo_, std::move(c));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.lo_, b.lo_);
    long hi = std::max(a.hi(), b.hi());
    std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[static_cast<std::size_t>(a.lo_ - lo) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[static_cast<std::size_t>(b.lo_ - lo) + i] += b.coeffs_[i];
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentPoly(a.lo_ + b.lo_, std::move(c));
}

LaurentPoly operator*(const mpz_class& c, const LaurentPoly& p) {
    if (c == 0 || p.is_zero()) return LaurentPoly();
    std::vector<mpz_class> out(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
    return LaurentPoly(p.lo_, std::move(out));
}

LaurentPoly LaurentPoly::substitute_neg_y() const {
    std::vector<mpz_class> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) {
        long e = lo_ + static_cast<long>(i);
        if (e % 2 != 0) c[i] = -c[i];
    }
    return LaurentPoly(lo_, std::move(c));
}

mpz_class LaurentPoly::evaluate_at_one() const {
    mpz_class s = 0;
    for (const mpz_class& c : coeffs_) s += c;
    return s;
}

mpz_class LaurentPoly::evaluate_at_minus_one() const {
    mpz_class s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        long e = lo_ + static_cast<long>(i);
        if (e % 2 == 0) s += coeffs_[i];
        else s -= coeffs_[i];
    }
    return s;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = hi(); e >= lo_; --e) {
        mpz_class c = coeff(e);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpz_class mag = abs(c);
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e != 0) {
            if (mag != 1) os << "*";
            os << "y";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

} // namespace hilbgen
