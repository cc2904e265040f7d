#include "hilbgen/int_series.hpp"

#include <algorithm>
#include <sstream>

namespace hilbgen {

namespace {

bool offset_denominator_ok(const mpq_class& q) {
    const mpz_class& den = q.get_den();
    return den > 0 && mpz_divisible_p(mpz_class(24).get_mpz_t(), den.get_mpz_t());
}

} // namespace

IntSeries::IntSeries(mpq_class offset, std::vector<mpz_class> coeffs)
    : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {
    offset_.canonicalize();
    validate_offset();
}

void IntSeries::validate_offset() const {
    if (!offset_denominator_ok(offset_))
        throw OffsetMismatch("series offset denominator must divide 24, got " +
                             offset_.get_str());
}

IntSeries IntSeries::zero(std::size_t truncation) {
    return IntSeries(0, std::vector<mpz_class>(truncation, 0));
}

IntSeries IntSeries::one(std::size_t truncation) {
    std::vector<mpz_class> c(truncation, 0);
    if (truncation > 0) c[0] = 1;
    return IntSeries(0, std::move(c));
}

bool IntSeries::has_integer_offset() const { return offset_.get_den() == 1; }

bool IntSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

IntSeries IntSeries::truncated(std::size_t order) const {
    if (order > coeffs_.size())
        throw InconsistentDerivation("cannot extend truncation window from " +
                                     std::to_string(coeffs_.size()) + " to " +
                                     std::to_string(order));
    return IntSeries(offset_, std::vector<mpz_class>(coeffs_.begin(),
                                                     coeffs_.begin() + order));
}

IntSeries IntSeries::with_offset(const mpq_class& new_offset) const {
    return IntSeries(new_offset, coeffs_);
}

IntSeries IntSeries::operator-() const {
    std::vector<mpz_class> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return IntSeries(offset_, std::move(c));
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
    // Align on the smaller offset; the shift must land on the integer grid.
    const IntSeries& lo = (a.offset_ <= b.offset_) ? a : b;
    const IntSeries& hi = (a.offset_ <= b.offset_) ? b : a;
    mpq_class shift_q = hi.offset_ - lo.offset_;
    if (shift_q.get_den() != 1)
        throw OffsetMismatch("cannot add series whose offsets differ by " +
                             shift_q.get_str());
    if (!shift_q.get_num().fits_slong_p())
        throw OffsetMismatch("offset difference too large: " + shift_q.get_str());
    std::size_t shift = static_cast<std::size_t>(shift_q.get_num().get_si());

    std::size_t len = std::min(lo.coeffs_.size(), shift + hi.coeffs_.size());
    std::vector<mpz_class> c(lo.coeffs_.begin(), lo.coeffs_.begin() + len);
    for (std::size_t i = shift; i < len; ++i) c[i] += hi.coeffs_[i - shift];
    return IntSeries(lo.offset_, std::move(c));
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) { return a + (-b); }

namespace detail {

std::vector<mpz_class> convolve_schoolbook(const std::vector<mpz_class>& a,
                                           const std::vector<mpz_class>& b,
                                           std::size_t out_len) {
    std::vector<mpz_class> out(out_len, 0);
    for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
        if (a[i] == 0) continue;
        std::size_t jmax = std::min(b.size(), out_len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

namespace {

using Vec = std::vector<mpz_class>;

Vec karatsuba_full(const Vec& a, const Vec& b) {
    std::size_t n = a.size(), m = b.size();
    if (n == 0 || m == 0) return {};
    if (std::min(n, m) <= kKaratsubaThreshold / 2)
        return convolve_schoolbook(a, b, n + m - 1);

    std::size_t half = std::max(n, m) / 2;
    Vec a0(a.begin(), a.begin() + std::min(half, n));
    Vec a1(a.begin() + std::min(half, n), a.end());
    Vec b0(b.begin(), b.begin() + std::min(half, m));
    Vec b1(b.begin() + std::min(half, m), b.end());

    Vec z0 = karatsuba_full(a0, b0);
    Vec z2 = (a1.empty() || b1.empty()) ? Vec{} : karatsuba_full(a1, b1);

    auto padded_sum = [](const Vec& x, const Vec& y) {
        Vec s(std::max(x.size(), y.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i];
        for (std::size_t i = 0; i < y.size(); ++i) s[i] += y[i];
        return s;
    };
    Vec z1 = karatsuba_full(padded_sum(a0, a1), padded_sum(b0, b1));
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    Vec out(n + m - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
    for (std::size_t i = 0; i < z1.size() && half + i < out.size(); ++i)
        out[half + i] += z1[i];
    for (std::size_t i = 0; i < z2.size() && 2 * half + i < out.size(); ++i)
        out[2 * half + i] += z2[i];
    return out;
}

} // namespace

std::vector<mpz_class> convolve_karatsuba(const std::vector<mpz_class>& a,
                                          const std::vector<mpz_class>& b,
                                          std::size_t out_len) {
    Vec full = karatsuba_full(a, b);
    full.resize(out_len, 0);
    return full;
}

} // namespace detail

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    std::size_t len = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<mpz_class> av(a.coeffs_.begin(), a.coeffs_.begin() + len);
    std::vector<mpz_class> bv(b.coeffs_.begin(), b.coeffs_.begin() + len);
    std::vector<mpz_class> out =
        (len > detail::kKaratsubaThreshold)
            ? detail::convolve_karatsuba(av, bv, len)
            : detail::convolve_schoolbook(av, bv, len);
    return IntSeries(a.offset_ + b.offset_, std::move(out));
}

IntSeries IntSeries::inverse() const {
    if (coeffs_.empty())
        throw NonUnitLeadingCoefficient("cannot invert a width-0 series");
    const mpz_class& lead = coeffs_[0];
    if (lead != 1 && lead != -1)
        throw NonUnitLeadingCoefficient("leading coefficient must be ±1, got " +
                                        lead.get_str());
    std::size_t n = coeffs_.size();
    std::vector<mpz_class> inv(n, 0);
    inv[0] = lead; // 1/lead == lead for ±1
    for (std::size_t k = 1; k < n; ++k) {
        mpz_class acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (coeffs_[j] == 0) continue;
            acc += coeffs_[j] * inv[k - j];
        }
        inv[k] = -lead * acc;
    }
    return IntSeries(-offset_, std::move(inv));
}

IntSeries IntSeries::pow(long e) const {
    if (e == 0) return IntSeries::one(coeffs_.size());
    if (e < 0) return inverse().pow(-e);
    IntSeries base = *this;
    IntSeries result = IntSeries::one(coeffs_.size());
    unsigned long exp = static_cast<unsigned long>(e);
    bool result_set = false;
    while (exp > 0) {
        if (exp & 1) {
            result = result_set ? result * base : base;
            result_set = true;
        }
        exp >>= 1;
        if (exp > 0) base = base * base;
    }
    return result;
}

IntSeries IntSeries::substitute_q_power(long m) const {
    if (m < 1) throw DivisibilityViolation("substitution power must be >= 1");
    if (m == 1) return *this;
    std::size_t n = coeffs_.size();
    std::vector<mpz_class> out(n * static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < n; ++i)
        out[i * static_cast<std::size_t>(m)] = coeffs_[i];
    return IntSeries(offset_ * m, std::move(out));
}

IntSeries IntSeries::nth_root(long n) const {
    if (n < 1) throw DivisibilityViolation("root index must be >= 1");
    if (n == 1) return *this;
    if (coeffs_.empty() || coeffs_[0] != 1)
        throw NonUnitLeadingCoefficient("n-th root requires leading coefficient 1");
    mpq_class new_offset = offset_ / n;
    if (!offset_denominator_ok(new_offset))
        throw DivisibilityViolation("offset " + offset_.get_str() +
                                    " is not divisible by " + std::to_string(n));

    // From b^n = a with a0 = b0 = 1:  n·a·b' = a'·b, giving
    //   b_k = [ k·a_k + sum_{i=1}^{k-1} (i - n(k-i))·a_i·b_{k-i} ] / (n·k).
    // For an exact n-th power over ZZ every division is exact; the first
    // inexact one certifies the input is not one.
    std::size_t len = coeffs_.size();
    std::vector<mpz_class> b(len, 0);
    b[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
        mpz_class num = mpz_class(static_cast<long>(k)) * coeffs_[k];
        for (std::size_t i = 1; i < k; ++i) {
            if (coeffs_[i] == 0) continue;
            mpz_class w = mpz_class(static_cast<long>(i)) -
                          mpz_class(n) * static_cast<long>(k - i);
            num += w * coeffs_[i] * b[k - i];
        }
        mpz_class den = mpz_class(n) * static_cast<long>(k);
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw InexactRoot("coefficient " + std::to_string(k) +
                              " requires non-integer division; input is not an exact " +
                              std::to_string(n) + "-th power");
        mpz_divexact(b[k].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return IntSeries(new_offset, std::move(b));
}

bool operator==(const IntSeries& a, const IntSeries& b) {
    if (a.offset_ != b.offset_) return false;
    std::size_t len = std::min(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < len; ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

std::size_t IntSeries::overlap_length(const IntSeries& a, const IntSeries& b) {
    if (a.offset_ != b.offset_) return 0;
    return std::min(a.coeffs_.size(), b.coeffs_.size());
}

std::string IntSeries::to_string(std::size_t max_terms) const {
    std::ostringstream os;
    std::size_t printed = 0;
    for (std::size_t i = 0; i < coeffs_.size() && printed < max_terms; ++i) {
        if (coeffs_[i] == 0) continue;
        mpq_class e = offset_ + static_cast<long>(i);
        if (printed > 0) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        mpz_class mag = abs(coeffs_[i]);
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e != 0) {
            if (mag != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e.get_str();
        }
        ++printed;
    }
    if (printed == 0) os << "0";
    os << " + O(q^" << mpq_class(offset_ + static_cast<long>(coeffs_.size())).get_str()
       << ")";
    return os.str();
}

} // namespace hilbgen
