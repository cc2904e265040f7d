#pragma once

#include <json.hpp>

#include "hilbgen/bps_tables.hpp"
#include "hilbgen/catalog.hpp"
#include "hilbgen/jacobi.hpp"
#include "hilbgen/local_factors.hpp"
#include "hilbgen/modular_numeric.hpp"

namespace hilbgen::io {

using json = nlohmann::json;

json to_json(const IntSeries& s);
IntSeries int_series_from_json(const json& j);

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const TwoVarSeries& s);
TwoVarSeries two_var_from_json(const json& j);

json to_json(const EtaProduct& p);
EtaProduct eta_product_from_json(const json& j);

json to_json(const CuspReport& r);
json to_json(const GenusExpansion& g);
json to_json(const SingularityType& s);
json to_json(const RowReport& r);
json to_json(const BpsTable& t);
json to_json(const HyperellipticTable& t);
json to_json(const BopyReport& r);
json to_json(const LocalFactor& f);
json to_json(const MultiplierMeasurement& m, const GammaZeroElement& L);

/// Full catalog as a versioned document.
json catalog_to_json();

} // namespace hilbgen::io
