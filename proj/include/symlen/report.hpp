#pragma once

#include <string>

#include "json.hpp"
#include "symlen/reducer.hpp"

namespace symlen {

nlohmann::json to_json(const Place& place);
nlohmann::json to_json(const ResidueVector& v);
nlohmann::json to_json(const KummerVector& v);
nlohmann::json to_json(const ZeroCertificate& cert);
nlohmann::json to_json(const ReductionReport& rep);

/// exponent, index, residue vector and reciprocity for one product
nlohmann::json invariants_json(const SymbolProduct& p);

/// One line per step: label, rule, indices and the product after it.
std::string render_plain(const ReductionReport& rep);
std::string render_plain(const ZeroCertificate& cert);

}  // namespace symlen
