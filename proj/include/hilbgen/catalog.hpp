#pragma once

#include <set>
#include <string>
#include <vector>

#include "hilbgen/eta_product.hpp"
#include "hilbgen/local_factors.hpp"

namespace hilbgen {

enum class GroupTag { trivial, Z2, Z3, Z4, Z6, Q, D, T };

const char* to_string(GroupTag g);
GroupTag parse_group_tag(const std::string& text);
long group_order(GroupTag g);

/// Multiset of ADE singular points on a quotient surface.
class SingularityType {
public:
    SingularityType() = default;
    explicit SingularityType(const std::map<AdeTag, long>& counts);

    long count(AdeTag tag) const;
    const std::map<AdeTag, long>& counts() const { return counts_; }

    /// Total number of singular points.
    long r() const;
    /// Euler characteristic of the smooth locus: -sum counts/stabilizer.
    mpq_class smooth_locus_euler() const;
    /// Euler characteristic of the exceptional locus of the resolution.
    long exceptional_euler() const;
    /// smooth_locus_euler + exceptional_euler; 24 exactly for every
    /// non-trivial catalog row (the resolution is a K3 surface).
    mpq_class resolution_euler() const;

    std::string to_string() const; // e.g. "2D4 + 3A3 + 2A1"

    friend bool operator==(const SingularityType& a, const SingularityType& b) {
        return a.counts_ == b.counts_;
    }
    friend bool operator<(const SingularityType& a, const SingularityType& b);

private:
    std::map<AdeTag, long> counts_; // zero-count tags omitted
};

/// One catalog row: an equivalence class of translation-free symplectic
/// actions, its singularity data, and the reference eta product for the
/// reciprocal series Z^{-1}.
struct ActionRecord {
    int row_id = 0;
    GroupTag group = GroupTag::trivial;
    long order = 1; // |G|
    SingularityType sing_type;
    long euler_quotient = 0; // e(A/G)
    EtaProduct reference_product{1, {}};

    mpq_class weight() const {
        mpq_class w(euler_quotient, 2);
        w.canonicalize();
        return w;
    }
};

/// The eleven translation-free rows.
const std::vector<ActionRecord>& catalog();
const ActionRecord& catalog_row(int row_id);

/// Z_{A,G} = prod (1-q^{kn})^{r-e} * prod_i Zhat_{Delta_i}(q^{k/k_i}),
/// an integer series with offset 0 and leading coefficient 1.
IntSeries assemble_z(const ActionRecord& row, const LocalSet& locals,
                     std::size_t truncation);

/// Extension of a base action by a group of translations of order |T|.
struct TranslationExtension {
    int base_row = 1;
    long translation_order = 1; // |T| = a*b for T = Z_a x Z_b
    long effective_level() const;
};

/// q -> q^{|T|}.
IntSeries apply_translation(const IntSeries& z, const TranslationExtension& t);

/// Stabilizer types whose fixing subgroup embeds into the given group
/// (static data reviewed against the catalog).
const std::set<AdeTag>& allowed_stabilizers(GroupTag g);

/// All non-negative solutions of sum counts_tau * (c_tau - 1/k_tau) = 24
/// over the allowed tags, sorted lexicographically.
std::vector<SingularityType> solve_singularity_types(GroupTag g,
                                                     const std::set<AdeTag>& allowed);
std::vector<SingularityType> solve_singularity_types(GroupTag g);

struct RowCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RowReport {
    int row_id = 0;
    std::vector<RowCheck> checks;
    bool pass = true;

    void add(std::string name, bool ok, std::string detail = "");
};

/// Bundles the per-row certification checks: assembly inverts the reference
/// product, holomorphy/cusp data, weight, level, and the Euler constraints.
RowReport verify_row(const ActionRecord& row, const LocalSet& locals,
                     std::size_t truncation);

} // namespace hilbgen
