#include "hilbgen/eta_product.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hilbgen {

IntSeries euler_factor(long m, std::size_t truncation) {
    if (m < 1) throw DivisibilityViolation("euler factor scale must be >= 1");
    std::vector<mpz_class> c(truncation, 0);
    // Generalized pentagonal exponents k(3k-1)/2 with sign (-1)^k.
    if (truncation > 0) c[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        bool any = false;
        int sign = (k % 2 == 0) ? 1 : -1;
        for (long g : {g1, g2}) {
            unsigned long long idx =
                static_cast<unsigned long long>(g) * static_cast<unsigned long long>(m);
            if (idx < truncation) {
                c[static_cast<std::size_t>(idx)] += sign;
                any = true;
            }
        }
        if (!any) break;
    }
    return IntSeries(0, std::move(c));
}

IntSeries euler_factor_direct(long m, std::size_t truncation) {
    IntSeries acc = IntSeries::one(truncation);
    for (long n = 1; static_cast<unsigned long long>(n) * m < truncation; ++n) {
        std::vector<mpz_class> f(truncation, 0);
        f[0] = 1;
        f[static_cast<std::size_t>(n * m)] = -1;
        acc = acc * IntSeries(0, std::move(f));
    }
    return acc;
}

IntSeries eta_expansion(std::size_t truncation) {
    return euler_factor(1, truncation).with_offset(mpq_class(1, 24));
}

std::vector<long> divisors_of(long n) {
    std::vector<long> divs;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

EtaProduct::EtaProduct(long level, const std::map<long, long>& exponents)
    : level_(level) {
    if (level < 1) throw ParseError("eta product level must be >= 1");
    for (long d : divisors_of(level)) exponents_[d] = 0;
    for (const auto& [m, a] : exponents) {
        if (m < 1 || level % m != 0)
            throw DivisibilityViolation("eta scale " + std::to_string(m) +
                                        " does not divide level " +
                                        std::to_string(level));
        exponents_[m] = a;
    }
}

long EtaProduct::exponent(long m) const {
    auto it = exponents_.find(m);
    return it == exponents_.end() ? 0 : it->second;
}

mpq_class EtaProduct::weight() const {
    long s = 0;
    for (const auto& [m, a] : exponents_) s += a;
    mpq_class w(s, 2);
    w.canonicalize();
    return w;
}

mpq_class EtaProduct::order_at_infinity() const {
    long s = 0;
    for (const auto& [m, a] : exponents_) s += m * a;
    mpq_class o(s, 24);
    o.canonicalize();
    return o;
}

IntSeries EtaProduct::expansion(std::size_t truncation) const {
    IntSeries acc = IntSeries::one(truncation);
    for (const auto& [m, a] : exponents_) {
        if (a == 0) continue;
        acc = acc * euler_factor(m, truncation).pow(a);
    }
    return acc.with_offset(order_at_infinity());
}

std::string EtaProduct::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, a] : exponents_) {
        if (a == 0) continue;
        if (!first) os << " * ";
        os << "eta(q";
        if (m != 1) os << "^" << m;
        os << ")";
        if (a != 1) os << "^" << a;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

EtaProduct EtaProduct::parse(const std::string& text, long level) {
    std::map<long, long> exps;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](const std::string& tok) {
        if (text.compare(i, tok.size(), tok) != 0)
            throw ParseError("expected '" + tok + "' at position " +
                             std::to_string(i) + " in '" + text + "'");
        i += tok.size();
    };
    auto parse_long = [&]() -> long {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected integer at position " +
                                         std::to_string(start) + " in '" + text + "'");
        return std::stol(text.substr(start, i - start));
    };

    bool any_term = false;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (!any_term && text[i] == '1' && (i + 1 == text.size() ||
                                            text.find_first_not_of(" \t", i + 1) ==
                                                std::string::npos)) {
            ++i;
            any_term = true;
            break;
        }
        expect("eta(q");
        long m = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            m = parse_long();
        }
        expect(")");
        long a = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            a = parse_long();
        }
        exps[m] += a;
        any_term = true;
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            continue;
        }
        break;
    }
    skip_ws();
    if (i != text.size())
        throw ParseError("trailing input at position " + std::to_string(i) +
                         " in '" + text + "'");
    if (!any_term) throw ParseError("empty eta product expression");

    if (level == 0) {
        level = 1;
        for (const auto& [m, a] : exps)
            if (a != 0) level = std::lcm(level, m);
    }
    return EtaProduct(level, exps);
}

bool CuspReport::has_exact_zero() const {
    return std::any_of(cusps.begin(), cusps.end(),
                       [](const CuspValue& v) { return v.sign == 0; });
}

CuspReport koehler_check(const EtaProduct& p) {
    CuspReport report;
    bool all_nonneg = true;
    bool all_pos = true;
    for (long c : divisors_of(p.level())) {
        mpq_class total = 0;
        for (const auto& [m, a] : p.exponents()) {
            if (a == 0) continue;
            long g = std::gcd(c, m);
            total += mpq_class(g * g * a, m);
        }
        total.canonicalize();
        CuspValue v;
        v.c = c;
        v.value = total;
        v.sign = (total > 0) ? 1 : (total < 0 ? -1 : 0);
        all_nonneg = all_nonneg && v.sign >= 0;
        all_pos = all_pos && v.sign > 0;
        report.cusps.push_back(std::move(v));
    }
    report.classification = !all_nonneg ? CuspClass::non_holomorphic
                            : all_pos   ? CuspClass::cusp_form
                                        : CuspClass::holomorphic;
    return report;
}

const char* to_string(CuspClass c) {
    switch (c) {
        case CuspClass::holomorphic: return "holomorphic";
        case CuspClass::cusp_form: return "cusp_form";
        case CuspClass::non_holomorphic: return "non_holomorphic";
    }
    return "?";
}

} // namespace hilbgen
