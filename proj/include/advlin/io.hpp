#pragma once

#include <string>

#include "advlin/graph.hpp"
#include "advlin/matrix.hpp"
#include "advlin/poly.hpp"

#include <json.hpp>

namespace advlin::io {

using nlohmann::json;

// {"rows":N,"cols":M,"data":[[[re,im],...],...]}; exact backends mark
// themselves with "backend":"int"/"rat" and write decimal strings.
json to_json(const CMat& m);
json to_json(const ZMat& m);
json to_json(const QMat& m);

CMat cmat_from_json(const json& j);
ZMat zmat_from_json(const json& j);

// {"coeffs":[[re,im],...]} ascending.
json to_json(const poly::Poly& p);
poly::Poly poly_from_json(const json& j);

// {"n":N,"edges":[[i,j],...]}, 1-based.
json to_json(const graphs::Graph& g);
graphs::Graph graph_from_json(const json& j);

json scalar_to_json(Scalar z);
Scalar scalar_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace advlin::io
