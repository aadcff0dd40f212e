#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "camspec/degrees.hpp"
#include "camspec/hitchin.hpp"
#include "camspec/lie.hpp"
#include "camspec/matrix.hpp"
#include "camspec/rational.hpp"

namespace camspec {

// Bit-exact wire forms.  A scalar is a 4-array of decimal integer strings
// [re_num, re_den, im_num, im_den]; a matrix is a row-major nested array of
// scalars.  Documents carry a "schema" tag ("<name>/1").  All parse errors
// are ParseError and name the offending path.

nlohmann::json scalar_to_wire(const GaussianRational& q);
GaussianRational scalar_from_wire(const nlohmann::json& j, const std::string& path);

nlohmann::json vector_to_wire(const std::vector<GaussianRational>& v);
std::vector<GaussianRational> vector_from_wire(const nlohmann::json& j, const std::string& path);

nlohmann::json matrix_to_wire(const Matrix& m);
Matrix matrix_from_wire(const nlohmann::json& j, const std::string& path);

// {"schema": "higgs-point/1", "p": int, "beta": (p+1) x p, "gamma": p x (p+1)}
nlohmann::json higgs_to_wire(const HiggsPoint& hp);
HiggsPoint higgs_from_wire(const nlohmann::json& doc);

// {"schema": "<spectral-fiber|cameral-fiber>/1", "p": int,
//  "omega": [p scalars], "roots": [2p+1 scalars]}
struct FiberDocument {
    BaseFiberPoint base;
    std::vector<GaussianRational> roots;
};
nlohmann::json fiber_to_wire(const FiberDocument& doc, const std::string& schema_name);
FiberDocument fiber_from_wire(const nlohmann::json& doc, const std::string& schema_name);

// Flat integer map.
nlohmann::json ledger_to_wire(const DegreeLedger& ledger);
DegreeLedger ledger_from_wire(const nlohmann::json& doc);

// Strict integer field access (ParseError on anything but a JSON integer).
long long int_from_wire(const nlohmann::json& j, const std::string& path);

// Reads and parses a JSON document; ParseError carries the parser position.
nlohmann::json load_json_file(const std::string& file_name);
nlohmann::json parse_json_text(const std::string& text, const std::string& origin);

} // namespace camspec
