#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncsys/autgroup.hpp"
#include "ncsys/ncs.hpp"
#include "ncsys/nsym.hpp"

namespace ncsys {

class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

// [{"t": k, "word": [i, ...], "coeff": "p/q"}, ...]; commutative rings write
// "exps": [e1, ..., en] instead of "word" and accept either on input.
Json series_to_json(const TruncSeries& u);
TruncSeries series_from_json(const Ring& ring, const Json& j);

Json vector_to_json(const SeriesVector& v);
SeriesVector vector_from_json(const Ring& ring, const Json& j);

// {"n", "commutative", "alpha", "N_z", "N_t", "H": [component term lists]}
Json automorphism_to_json(const Automorphism& F);
Automorphism automorphism_from_json(const Json& j);
// Same header with "a" in place of "H".
Json dlog_to_json(const DLog& d);
DLog dlog_from_json(const Json& j);

Ring ring_from_json(const Json& j);

Json derivation_to_json(const Derivation& delta);
// Symbolic operators: {"identity": c, "terms": [{"scalar", "word": [derivation, ...]}]};
// otherwise {"action": [{"word", "image"}]} over monomials with nonzero image.
Json diffop_to_json(const DiffOp& op);

// [{"word": [m1, ...], "coeff": "p/q"}, ...]
Json nsym_to_json(const NSymElem& P);
NSymElem nsym_from_json(const Json& j, int max_weight);

Json reports_to_json(const std::vector<Report>& reports);

// {"status": "witness", "n", "automorphism", "u", "value"} or
// {"status": "inconclusive", "attempts", "max_n"}.
Json separation_to_json(const SeparationResult& result);

// Parses text as JSON, mapping parse errors to SchemaError.
Json parse_json(const std::string& text);

} // namespace ncsys
