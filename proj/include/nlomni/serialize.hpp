#pragma once

#include <string>

#include <json.hpp>

#include "nlomni/multilinear.hpp"
#include "nlomni/polycalc.hpp"

namespace nlomni {

// Witness encodings. Rationals are strings ("p/q"); basis indices are
// printed 1-based, matching the instance file format.

nlohmann::json to_json(const Scalar& x);
nlohmann::json to_json(const Vector& v);
nlohmann::json index_json(const WedgeIndex& idx);
/// "e1^e3"; the empty index prints as "1".
std::string wedge_label(const WedgeIndex& idx);
nlohmann::json to_json(const WedgeVector& w);
nlohmann::json to_json(const Endo& a);
nlohmann::json to_json(const TensorPairValue& t);

/// Polynomials are strings; forms are keyed "dy1^dy2", multivectors
/// "d1^d2", a 0-form by "1".
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const PolyVecField& x);
nlohmann::json to_json(const PolyForm& w);
nlohmann::json to_json(const PolyMultiVec& pi);
nlohmann::json to_json(const GenSection& s);

}  // namespace nlomni
