#pragma once

#include <json.hpp>

#include "lagsub/ideals.hpp"

namespace lagsub {

using Json = nlohmann::json;

// Roots: plain integer arrays of simple-root coefficients.
Json root_to_json(const Root& r);
Root root_from_json(const Json& j, const RootSystem& rs); // validated against Phi

// Exact scalars travel as strings ("-3/2"); integers are also accepted.
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, std::size_t expected_dim);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json subspace_to_json(const Subspace& s); // RREF basis rows

Json double_element_to_json(const DoubleElement& v);
DoubleElement double_element_from_json(const Json& j, const SemidirectDouble& dbl);

// Group elements: the generator word.
Json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j, const LieAlgebra& algebra);

Json ideal_to_json(const RootSystem& rs, const IdealDescriptor& d);
IdealDescriptor ideal_from_json(const Json& j, const RootSystem& rs); // validates upper set

Json cocycle_to_json(const Cocycle& f);

Json certificate_to_json(const ClosureCertificate& c, const RootSystem& rs);

Json orbit_row_to_json(const RootSystem& rs, const OrbitRow& row);

} // namespace lagsub
