#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hilbgen/catalog.hpp"
#include "hilbgen/jacobi.hpp"

namespace hilbgen {

/// Two-variable refinement of a catalog row's series: the coefficient of q^d
/// is the normalized signed-Hodge index of the degree-d invariant locus, a
/// palindromic Laurent polynomial. Requires a non-trivial row.
TwoVarSeries chi_y_series(const ActionRecord& row, const LocalSet& locals,
                          std::size_t truncation);

/// Genus-degree table of normalized curve-count invariants. Entries are the
/// values divided by the normalization (16); raw() multiplies it back.
struct BpsTable {
    long dmax = 0;
    long hmax = 0;
    static constexpr long normalization = 16;
    std::map<std::pair<long, long>, mpz_class> entries; // (d,h) -> value/16

    mpz_class normalized(long d, long h) const;
    mpz_class raw(long d, long h) const;
};

BpsTable bps_table(long dmax, long hmax);
/// hmax defaults to dmax+1; entries provably vanish beyond.
BpsTable bps_table(long dmax);

/// Degree generating series of the genus-0 invariants divided by 16:
/// prod (1-q^{2n})^8 / (1-q^n)^16.
IntSeries genus_zero_series(std::size_t truncation);

/// Counts of genus-g hyperelliptic curves with 2-torsion Weierstrass points.
struct HyperellipticTable {
    long dmax = 0;
    std::map<std::pair<long, long>, mpz_class> entries; // (d,g) -> count

    mpz_class count(long d, long g) const;
    long gmax(long d) const { return d + 1; }
};

HyperellipticTable hyperelliptic_table(long dmax);

struct BopyCheck {
    long d = 0;
    mpz_class lhs; // raw genus-0 invariant
    mpz_class rhs; // sum_g h_d(g) * 2^{2g}
    bool pass = false;
};

struct BopyReport {
    long dmax = 0;
    std::vector<BopyCheck> checks;
    bool pass = true;
};

/// Checks raw_genus0(d) == sum_{g=1}^{d+1} h_d(g) * 4^g for every d <= dmax.
BopyReport verify_hilb_bopy(long dmax);

/// Reference generating series for the smooth K3 case: the Euler series
/// q^{-1} prod (1-q^n)^{-24} and its two-variable refinement
/// q^{-1} prod (1-q^n)^{-20} (1+yq^n)^{-2} (1+y^{-1}q^n)^{-2}.
struct K3Reference {
    IntSeries euler;
    TwoVarSeries refined;
    /// True when the quotient form (-t over the discriminant times the weak
    /// Jacobi form at -y) reproduces the product form on the shared window.
    bool forms_agree = false;
};

K3Reference k3_reference_series(std::size_t truncation);

} // namespace hilbgen
