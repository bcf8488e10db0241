#ifndef ARR_IO_JSON_HPP
#define ARR_IO_JSON_HPP

#include <nlohmann/json.hpp>

#include "arr/arrangement.hpp"
#include "arr/catalog.hpp"
#include "arr/flats.hpp"
#include "arr/monodromy.hpp"
#include "arr/multinet.hpp"
#include "arr/resonance.hpp"

namespace arr {

using json = nlohmann::json;

/// Arrangement schema: { "cyclotomic_order": m, "ambient_dim": l,
/// "hyperplanes": [ { "label": s, "normal": [[c0..c_{phi(m)-1}], ...] } ] }
/// with integer power-basis coefficients per coordinate.
json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);

/// { "flats": [ { "members": [labels...], "multiplicity": k } ] }
json flats_to_json(const Arrangement& a, const FlatTable& table);

json census_to_json(const FlatCensus& census);

json criteria_to_json(const VanishingReport& report);

/// { "prime": p, "dim_Zp": d, "beta": b, "witness": {label: value} | null,
///   "criteria": [...], "beta_via_aomoto": x }
json betti_to_json(const Arrangement& a, const BettiNumber& beta, const VanishingReport& report,
                   int64_t beta_via_aomoto);

/// { "blocks": [[labels...], ...], "multiplicities": { label: int } };
/// weights omitted from the map default to 1.
json multinet_to_json(const Arrangement& a, const Multinet& net);
Multinet multinet_from_json(const Arrangement& a, const json& j);

json multinet_report_to_json(const Arrangement& a, const FlatTable& table,
                             const MultinetReport& report);

/// { "n": n, "e": { "1": n-1, "d": {"status": ..., ...} },
///   "char_poly": { "factors": [["t-1", n-1], ["Phi_3", 1]], "complete": b } }
json profile_to_json(const MonodromyProfile& profile, const CharPoly& poly);

} // namespace arr

#endif
