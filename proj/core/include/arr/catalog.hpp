#ifndef ARR_CATALOG_HPP
#define ARR_CATALOG_HPP

#include <optional>
#include <string>

#include "arr/arrangement.hpp"
#include "arr/flats.hpp"

namespace arr {

enum class Family { braid, monomial, full_monomial, g31, g32, g33, hessian };

/// Identifies a reflection arrangement the catalog can construct.
/// Parameters m, l apply to the braid/monomial/full-monomial families.
struct FamilySpec {
    Family family;
    int64_t m = 0;
    int64_t l = 0;
};

/// Parses a family string: "braid:l", "monomial:m:l", "full-monomial:m:l",
/// "G31", "G32", "G33", "hessian".
FamilySpec parse_family_spec(const std::string& s);
std::string to_string(const FamilySpec& spec);

/// Builds the arrangement with its conventional labels (H1, H12^3, ...).
/// Metadata marks catalog output as a reflection arrangement.
Arrangement build(const FamilySpec& spec);

/// Count of 2-flats per structural type, with their common multiplicity.
struct FlatCensus {
    struct Entry {
        std::string type; // I_a, I_b, I_c, I_d, II, or "other"
        int64_t count = 0;
        int64_t multiplicity = 0;
    };
    std::vector<Entry> entries;
    int64_t hyperplane_count = 0;

    bool operator==(const FlatCensus& rhs) const;
    /// Checks sum_type count * C(multiplicity, 2) == C(n, 2).
    bool pair_identity_holds() const;
};

/// Closed-form census for monomial and full-monomial families; rejects
/// families whose census is not closed-form here.
FlatCensus expected_flat_census(const FamilySpec& spec);

/// Classifies the flats of a computed table by the label patterns of the
/// monomial/full-monomial conventions.
FlatCensus census_of_table(const Arrangement& a, const FlatTable& table);

/// Reference Aomoto-Betti value beta_p for catalog arrangements of rank at
/// least 3 (the classification the reproduction command checks against).
/// nullopt if the classification does not cover the instance.
std::optional<int64_t> reference_beta(const FamilySpec& spec, int64_t p);

} // namespace arr

#endif
