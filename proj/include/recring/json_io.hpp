#ifndef RECRING_JSON_IO_HPP
#define RECRING_JSON_IO_HPP

#include "recring/chains.hpp"
#include "recring/groebner.hpp"
#include "recring/polynomial.hpp"
#include "recring/ring.hpp"

#include <json.hpp>

namespace recring {

using nlohmann::json;

/// Polynomial wire form: an array of {"c": decimal string,
/// "e": [[index, exponent], ...]} objects in display order.
json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j, const CoefficientRing& ring);

json coeff_ring_to_json(const CoefficientRing& ring);
CoefficientRing coeff_ring_from_json(const json& j);

/// Ring wire form: {"d": int, "n": int, "coeff": {"kind": "Z"|"Zmod",
/// "m": int?}, "P": [poly, ...]} with the terminal reducer zero.
json ring_spec_to_json(const RingSpec& ring);
RingSpec ring_spec_from_json(const json& j);

json report_to_json(const GroebnerReport& report);
json report_to_json(const ChainReport& report);

} // namespace recring

#endif
