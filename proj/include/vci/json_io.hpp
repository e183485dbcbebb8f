#pragma once

#include <json.hpp>

#include "vci/oracle.hpp"
#include "vci/vciengine.hpp"

namespace vci {

using Json = nlohmann::json;

// Polynomial: array of {"coeff": scalar-string, "exp": [ex0,ex1,ey0,ey1]}.
Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j, FieldDesc fd);

// Point set: {"field": "QQ" | "FP:<p>", "points": [[["1","0"],["0","1"]], ...]}.
Json point_set_to_json(const PointSet& x);
PointSet point_set_from_json(const Json& j);

// Ideal: {"field": ..., "generators": [polynomial, ...]}.
Json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& j);

// Certificate: {"field", "f", "g", "degrees": [[a,b],[c,d]],
//               "koszul_twists": [[0,0],[-a,-b],[-c,-d],[-a-c,-b-d]]}.
Json certificate_to_json(const VciCertificate& cert);
VciCertificate certificate_from_json(const Json& j, FieldDesc fd);

// Verdict: {"status": ..., optional "criterion"/"witness"/"certificate",
//           "trace": [...]}.
Json verdict_to_json(const VciVerdict& v);

Json refutation_to_json(const Refutation& r);

class JsonError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace vci
