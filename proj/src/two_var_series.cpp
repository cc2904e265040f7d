#include "hilbgen/two_var_series.hpp"

#include <algorithm>

namespace hilbgen {

TwoVarSeries::TwoVarSeries(long qoffset, std::vector<LaurentPoly> qcoeffs)
    : qoffset_(qoffset), qcoeffs_(std::move(qcoeffs)) {}

TwoVarSeries TwoVarSeries::zero(std::size_t truncation) {
    return TwoVarSeries(0, std::vector<LaurentPoly>(truncation));
}

TwoVarSeries TwoVarSeries::one(std::size_t truncation) {
    std::vector<LaurentPoly> c(truncation);
    if (truncation > 0) c[0] = LaurentPoly::constant(1);
    return TwoVarSeries(0, std::move(c));
}

TwoVarSeries TwoVarSeries::from_laurent(const LaurentPoly& v,
                                        std::size_t truncation) {
    std::vector<LaurentPoly> c(truncation);
    if (truncation > 0) c[0] = v;
    return TwoVarSeries(0, std::move(c));
}

TwoVarSeries TwoVarSeries::from_int_series(const IntSeries& s) {
    if (!s.has_integer_offset())
        throw OffsetMismatch("two-variable lift requires an integer q-offset, got " +
                             s.offset().get_str());
    std::vector<LaurentPoly> c(s.truncation_order());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (s.coeff(i) != 0) c[i] = LaurentPoly::constant(s.coeff(i));
    return TwoVarSeries(s.offset().get_num().get_si(), std::move(c));
}

TwoVarSeries TwoVarSeries::truncated(std::size_t order) const {
    if (order > qcoeffs_.size())
        throw InconsistentDerivation("cannot extend two-variable truncation window");
    return TwoVarSeries(qoffset_, std::vector<LaurentPoly>(
                                      qcoeffs_.begin(), qcoeffs_.begin() + order));
}

bool TwoVarSeries::is_symmetric() const {
    return std::all_of(qcoeffs_.begin(), qcoeffs_.end(),
                       [](const LaurentPoly& p) { return p.is_palindromic(); });
}

TwoVarSeries TwoVarSeries::operator-() const {
    std::vector<LaurentPoly> c(qcoeffs_.size());
    for (std::size_t i = 0; i < qcoeffs_.size(); ++i) c[i] = -qcoeffs_[i];
    return TwoVarSeries(qoffset_, std::move(c));
}

TwoVarSeries operator+(const TwoVarSeries& a, const TwoVarSeries& b) {
    long lo = std::min(a.qoffset_, b.qoffset_);
    long a_shift = a.qoffset_ - lo;
    long b_shift = b.qoffset_ - lo;
    std::size_t len = std::min(a.qcoeffs_.size() + static_cast<std::size_t>(a_shift),
                               b.qcoeffs_.size() + static_cast<std::size_t>(b_shift));
    std::vector<LaurentPoly> c(len);
    for (std::size_t i = 0; i < a.qcoeffs_.size(); ++i) {
        std::size_t k = i + static_cast<std::size_t>(a_shift);
        if (k < len) c[k] = c[k] + a.qcoeffs_[i];
    }
    for (std::size_t i = 0; i < b.qcoeffs_.size(); ++i) {
        std::size_t k = i + static_cast<std::size_t>(b_shift);
        if (k < len) c[k] = c[k] + b.qcoeffs_[i];
    }
    return TwoVarSeries(lo, std::move(c));
}

TwoVarSeries operator-(const TwoVarSeries& a, const TwoVarSeries& b) {
    return a + (-b);
}

TwoVarSeries operator*(const TwoVarSeries& a, const TwoVarSeries& b) {
    std::size_t len = std::min(a.qcoeffs_.size(), b.qcoeffs_.size());
    std::vector<LaurentPoly> c(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (a.qcoeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < len; ++j) {
            if (b.qcoeffs_[j].is_zero()) continue;
            c[i + j] = c[i + j] + a.qcoeffs_[i] * b.qcoeffs_[j];
        }
    }
    return TwoVarSeries(a.qoffset_ + b.qoffset_, std::move(c));
}

TwoVarSeries TwoVarSeries::scaled(const LaurentPoly& v) const {
    std::vector<LaurentPoly> c(qcoeffs_.size());
    for (std::size_t i = 0; i < qcoeffs_.size(); ++i) c[i] = v * qcoeffs_[i];
    return TwoVarSeries(qoffset_, std::move(c));
}

TwoVarSeries TwoVarSeries::inverse() const {
    if (qcoeffs_.empty())
        throw NonUnitLeadingCoefficient("cannot invert a width-0 series");
    const LaurentPoly& lead = qcoeffs_[0];
    if (!lead.is_monomial() ||
        (lead.coeffs()[0] != 1 && lead.coeffs()[0] != -1))
        throw NonUnitLeadingCoefficient(
            "q^0 coefficient must be ±y^j to invert, got " + lead.to_string());
    LaurentPoly inv_lead = LaurentPoly::term(lead.coeffs()[0], -lead.lo());
    std::size_t n = qcoeffs_.size();
    std::vector<LaurentPoly> inv(n);
    inv[0] = inv_lead;
    for (std::size_t k = 1; k < n; ++k) {
        LaurentPoly acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (qcoeffs_[j].is_zero() || inv[k - j].is_zero()) continue;
            acc = acc + qcoeffs_[j] * inv[k - j];
        }
        inv[k] = -(inv_lead * acc);
    }
    return TwoVarSeries(-qoffset_, std::move(inv));
}

TwoVarSeries TwoVarSeries::substitute_q_power(long m) const {
    if (m < 1) throw DivisibilityViolation("substitution power must be >= 1");
    if (m == 1) return *this;
    std::size_t n = qcoeffs_.size();
    std::vector<LaurentPoly> out(n * static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < n; ++i)
        out[i * static_cast<std::size_t>(m)] = qcoeffs_[i];
    return TwoVarSeries(qoffset_ * m, std::move(out));
}

TwoVarSeries TwoVarSeries::substitute_neg_y() const {
    std::vector<LaurentPoly> out(qcoeffs_.size());
    for (std::size_t i = 0; i < qcoeffs_.size(); ++i)
        out[i] = qcoeffs_[i].substitute_neg_y();
    return TwoVarSeries(qoffset_, std::move(out));
}

IntSeries TwoVarSeries::evaluate_y_one() const {
    std::vector<mpz_class> c(qcoeffs_.size());
    for (std::size_t i = 0; i < qcoeffs_.size(); ++i)
        c[i] = qcoeffs_[i].evaluate_at_one();
    return IntSeries(qoffset_, std::move(c));
}

IntSeries TwoVarSeries::evaluate_y_minus_one() const {
    std::vector<mpz_class> c(qcoeffs_.size());
    for (std::size_t i = 0; i < qcoeffs_.size(); ++i)
        c[i] = qcoeffs_[i].evaluate_at_minus_one();
    return IntSeries(qoffset_, std::move(c));
}

bool operator==(const TwoVarSeries& a, const TwoVarSeries& b) {
    if (a.qoffset_ != b.qoffset_) return false;
    std::size_t len = std::min(a.qcoeffs_.size(), b.qcoeffs_.size());
    for (std::size_t i = 0; i < len; ++i)
        if (a.qcoeffs_[i] != b.qcoeffs_[i]) return false;
    return true;
}

} // namespace hilbgen
