#pragma once

#include "sl2a/witness.hpp"

#include <string>

namespace sl2a {

// Deterministic JSON: keys sorted, ring integers as decimal strings,
// polynomials in canonical term order.  load(emit(c)) == c.
std::string emit_certificate(const WitnessCertificate& cert);
WitnessCertificate load_certificate(const std::string& text); // SchemaError

std::string amalgam_word_json(const AmalgamWord& w);
std::string search_stats_json(const SearchStats& s);

} // namespace sl2a
