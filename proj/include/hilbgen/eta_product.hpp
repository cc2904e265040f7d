#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbgen/int_series.hpp"

namespace hilbgen {

/// prod_{n>=1} (1 - q^{mn}) truncated, offset 0, via the pentagonal-number
/// expansion.
IntSeries euler_factor(long m, std::size_t truncation);

/// Direct-product expansion prod_{n<=limit} (1 - q^{mn}); the oracle the
/// pentagonal route is checked against.
IntSeries euler_factor_direct(long m, std::size_t truncation);

/// q^{1/24} * prod (1 - q^n), truncated.
IntSeries eta_expansion(std::size_t truncation);

std::vector<long> divisors_of(long n);

/// A level-N symbolic eta quotient: one integer exponent per divisor of N
/// (zeros stored explicitly). The level is part of the identity.
class EtaProduct {
public:
    EtaProduct(long level, const std::map<long, long>& exponents);

    long level() const { return level_; }
    const std::map<long, long>& exponents() const { return exponents_; }
    long exponent(long m) const;

    /// (1/2) * sum a_m, a half-integer.
    mpq_class weight() const;
    /// (1/24) * sum m*a_m.
    mpq_class order_at_infinity() const;

    IntSeries expansion(std::size_t truncation) const;

    /// Canonical `eta(q^m)^a * ...` grammar, divisors ascending, zero
    /// exponents omitted; the trivial product prints as "1".
    std::string to_string() const;
    /// Parses the grammar above. If level == 0 the least common multiple of
    /// the scales present is used.
    static EtaProduct parse(const std::string& text, long level = 0);

    friend bool operator==(const EtaProduct& a, const EtaProduct& b) {
        return a.level_ == b.level_ && a.exponents_ == b.exponents_;
    }

private:
    long level_;
    std::map<long, long> exponents_;
};

enum class CuspClass { holomorphic, cusp_form, non_holomorphic };

struct CuspValue {
    long c = 1;
    mpq_class value;
    int sign = 0; // -1, 0, +1
};

/// Exact per-cusp order data for an eta product of level N: one value
/// sum_{m|N} gcd(c,m)^2 * a_m / m per divisor c of N.
struct CuspReport {
    std::vector<CuspValue> cusps;
    CuspClass classification = CuspClass::holomorphic;

    bool holomorphic() const { return classification != CuspClass::non_holomorphic; }
    bool cuspidal() const { return classification == CuspClass::cusp_form; }
    bool has_exact_zero() const;
};

CuspReport koehler_check(const EtaProduct& p);

const char* to_string(CuspClass c);

} // namespace hilbgen
