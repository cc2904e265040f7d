#pragma once

#include <vector>

#include "hilbgen/int_series.hpp"
#include "hilbgen/laurent_poly.hpp"

namespace hilbgen {

/// Truncated series in q whose coefficients are Laurent polynomials in y.
/// qcoeffs()[i] is the y-coefficient of q^(qoffset + i).
class TwoVarSeries {
public:
    TwoVarSeries() = default;
    TwoVarSeries(long qoffset, std::vector<LaurentPoly> qcoeffs);

    static TwoVarSeries zero(std::size_t truncation);
    static TwoVarSeries one(std::size_t truncation);
    /// Constant-in-q series c + O(q^truncation).
    static TwoVarSeries from_laurent(const LaurentPoly& c, std::size_t truncation);
    /// Lift of a one-variable series; requires an integer offset.
    static TwoVarSeries from_int_series(const IntSeries& s);

    long qoffset() const { return qoffset_; }
    std::size_t truncation_order() const { return qcoeffs_.size(); }
    const std::vector<LaurentPoly>& qcoeffs() const { return qcoeffs_; }
    const LaurentPoly& qcoeff(std::size_t i) const { return qcoeffs_.at(i); }

    TwoVarSeries truncated(std::size_t order) const;

    /// True when every q-coefficient is palindromic in y.
    bool is_symmetric() const;

    TwoVarSeries operator-() const;
    friend TwoVarSeries operator+(const TwoVarSeries& a, const TwoVarSeries& b);
    friend TwoVarSeries operator-(const TwoVarSeries& a, const TwoVarSeries& b);
    friend TwoVarSeries operator*(const TwoVarSeries& a, const TwoVarSeries& b);

    TwoVarSeries scaled(const LaurentPoly& c) const;

    /// Inverse; the q^0 coefficient must be ±y^j (a unit of the Laurent ring).
    TwoVarSeries inverse() const;

    TwoVarSeries substitute_q_power(long m) const;
    TwoVarSeries substitute_neg_y() const;

    /// Evaluate every Laurent coefficient at y = 1 or y = -1.
    IntSeries evaluate_y_one() const;
    IntSeries evaluate_y_minus_one() const;

    friend bool operator==(const TwoVarSeries& a, const TwoVarSeries& b);
    friend bool operator!=(const TwoVarSeries& a, const TwoVarSeries& b) {
        return !(a == b);
    }

private:
    long qoffset_ = 0;
    std::vector<LaurentPoly> qcoeffs_;
};

} // namespace hilbgen
